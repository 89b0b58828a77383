#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropgb/reduction.hpp"

namespace tropgb {

enum class Algorithm { Naive, SignatureBased };

/// How the naive driver seeds the degree-d matrix at step i: with the rows
/// of the previous step's reduced matrix, or with the previous step's raw
/// rows (same image either way; raw matches the precision analysis).
enum class Carry { Reduced, Raw };

/// Row pool for the naive driver: F5-filtered rows only, or the whole
/// Macaulay matrix reduced until the known rank is reached (smaller loss,
/// more work).
enum class PivotPool { F5, FullMacaulay };

struct DriverOptions {
    Carry carry = Carry::Reduced;
    PivotPool pivot_pool = PivotPool::F5;
};

struct GroebnerBasisElement {
    HomogeneousPoly poly;
    Term leading;
    std::int64_t degree = 0;
    int step = 0;              // generator step i of the (d,i) reduction
    std::size_t trace_ref = 0; // index into GroebnerReport::steps
};

struct StepRecord {
    std::int64_t d = 0;
    int i = 0;
    std::size_t rows = 0, cols = 0, new_rows = 0;
    ReductionTrace trace;
    /// Leading monomials of the reduced rows (pivot column monomials),
    /// sorted decreasingly under the order.
    std::vector<Monomial> lms;
};

struct RunStatus {
    enum class Kind { Exact, Capped, Failed };
    Kind kind = Kind::Exact;
    /// Capped: smallest absolute precision over the basis coefficients.
    ExtVal capped_min_precision = ExtVal::infinity();
    std::string message;
    std::int64_t fail_degree = -1;
    int fail_step = -1;

    bool ok() const { return kind != Kind::Failed; }
};

struct GroebnerReport {
    std::vector<GroebnerBasisElement> basis;
    /// Divisibility-minimal generators of the computed leading-monomial ideal.
    std::vector<Monomial> lm_minimal;
    /// Full leading-monomial set per degree (at the last generator step).
    std::map<std::int64_t, std::vector<Monomial>> per_degree_lms;
    std::vector<StepRecord> steps;
    /// Largest per-reduction pivot-valuation sum across all steps.
    std::int64_t max_step_loss = 0;
    RunStatus status;
    /// Position k holds the 1-based input index of the k-th generator after
    /// the degree sort.
    std::vector<int> generator_order;
    std::int64_t degree_bound = 0;
};

/// Keeps only the divisibility-minimal monomials.
std::vector<Monomial> minimalize_lm(const std::vector<Monomial>& lms);

/// Multiplier monomials of degree (d - d_i) that survive the F5 criterion,
/// i.e. are not leading monomials of the step (d - d_i, i - 1), in increasing
/// order under the active order.
std::vector<Monomial> f5_row_filter(std::size_t nvars, std::int64_t mult_degree,
                                    const std::vector<Monomial>& lm_prev,
                                    const TropicalOrder& order);

/// Matrix-style driver: builds the F5-filtered Macaulay matrices degree by
/// degree and reduces each one to row-echelon form from scratch.
GroebnerReport tropical_mf5(std::vector<HomogeneousPoly> gens, std::int64_t degree_bound,
                            const TropicalOrder& order, const DriverOptions& opts = {});

/// Signature-based driver: rows of consecutive degrees are built from the
/// previous reduced matrix, carry signatures, and are reduced by the
/// signature-preserving kernel.
GroebnerReport tropical_mf5_sig(std::vector<HomogeneousPoly> gens,
                                std::int64_t degree_bound, const TropicalOrder& order);

/// Macaulay bound sum(d_i - 1) + 1 of a generator list.
std::int64_t macaulay_bound(const std::vector<HomogeneousPoly>& gens);

} // namespace tropgb
