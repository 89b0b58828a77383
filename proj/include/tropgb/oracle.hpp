#pragma once

#include <map>
#include <vector>

#include "tropgb/groebner.hpp"

namespace tropgb {

/// Monomial ideal given by divisibility-minimal generators.
struct MonomialIdeal {
    std::vector<Monomial> generators;

    static MonomialIdeal from(const std::vector<Monomial>& gens) {
        return {minimalize_lm(gens)};
    }
};

bool monomial_in_ideal(const Monomial& m, const MonomialIdeal& ideal);

struct FullMacaulayResult {
    std::map<std::int64_t, std::vector<Monomial>> per_degree_lms;
    std::vector<GroebnerBasisElement> basis;
    std::vector<Monomial> lm_minimal;
};

/// Ground-truth driver: reduces the full Macaulay matrix of every degree up
/// to D, no row filtering, no signatures. Exact backend only.
FullMacaulayResult full_macaulay_dgb(const std::vector<HomogeneousPoly>& gens,
                                     std::int64_t degree_bound,
                                     const TropicalOrder& order);

/// True iff f lies in the row space of the reduced matrix (exact backend).
bool in_row_space(const MacaulayMatrix& reduced, const ReductionTrace& trace,
                  const HomogeneousPoly& f);

struct RegularityVerdict {
    bool regular = true;
    std::int64_t first_failure_degree = -1;
    std::vector<std::int64_t> expected_ranks;
    std::vector<std::int64_t> observed_ranks;
};

/// Compares dim(<F> ∩ A_d) for d <= D against the Hilbert series of a
/// regular sequence, prod(1 - t^{d_i}) / (1 - t)^n. Exact backend only.
RegularityVerdict hilbert_regularity_check(const std::vector<HomogeneousPoly>& gens,
                                           std::int64_t degree_bound,
                                           const TropicalOrder& order);

} // namespace tropgb
