#include "tropgb/oracle.hpp"

#include <algorithm>
#include <set>

namespace tropgb {

bool monomial_in_ideal(const Monomial& m, const MonomialIdeal& ideal) {
    for (const Monomial& g : ideal.generators)
        if (g.divides(m)) return true;
    return false;
}

FullMacaulayResult full_macaulay_dgb(const std::vector<HomogeneousPoly>& gens,
                                     std::int64_t degree_bound,
                                     const TropicalOrder& order) {
    if (context_of(gens).backend != Backend::Exact)
        throw BackendError("the ground-truth driver runs on the exact backend only");
    FullMacaulayResult out;
    std::set<Monomial> seen;
    std::vector<Monomial> all_lms;
    for (std::int64_t d = 1; d <= degree_bound; ++d) {
        MacaulayMatrix M = build_full_macaulay(gens, d, order);
        auto [reduced, trace] = tropical_row_echelon(std::move(M), {});
        std::vector<Monomial> lms;
        for (const auto& p : trace.pivots) lms.push_back(p.col_mon);
        std::sort(lms.begin(), lms.end(), [&order](const Monomial& a, const Monomial& b) {
            return order.unit_term_cmp(a, b) > 0;
        });
        for (const auto& p : trace.pivots) {
            all_lms.push_back(p.col_mon);
            if (seen.count(p.col_mon)) continue;
            seen.insert(p.col_mon);
            Scalar inv = Scalar::exact_int(1, p.pivot.prime()) / p.pivot;
            out.basis.push_back({reduced.row_as_poly(p.row).scale(inv),
                                 {Scalar::exact_int(1, p.pivot.prime()), p.col_mon},
                                 d,
                                 0,
                                 0});
        }
        out.per_degree_lms[d] = std::move(lms);
    }
    out.lm_minimal = minimalize_lm(all_lms);
    return out;
}

bool in_row_space(const MacaulayMatrix& reduced, const ReductionTrace& trace,
                  const HomogeneousPoly& f) {
    if (reduced.context().backend != Backend::Exact)
        throw BackendError("membership test runs on the exact backend only");
    std::vector<Scalar> v = reduced.poly_as_row(f);
    for (const auto& p : trace.pivots) {
        const Scalar& c = v[p.col];
        if (c.is_structural_zero()) continue;
        Scalar q = c / p.pivot;
        for (std::size_t j = 0; j < reduced.cols(); ++j) {
            const Scalar& e = reduced.at(p.row, j);
            if (e.is_structural_zero()) continue;
            v[j] = v[j] - q * e;
        }
    }
    for (const Scalar& c : v)
        if (!c.is_structural_zero()) return false;
    return true;
}

namespace {
/// Coefficients 0..D of prod(1 - t^{d_i}) / (1 - t)^n.
std::vector<std::int64_t> regular_quotient_dims(const std::vector<std::int64_t>& degs,
                                                std::size_t nvars, std::int64_t D) {
    std::vector<std::int64_t> num(static_cast<std::size_t>(D) + 1, 0);
    num[0] = 1;
    for (std::int64_t di : degs) {
        // multiply by (1 - t^di)
        for (std::int64_t k = D; k >= di; --k)
            num[k] -= num[k - di];
    }
    // divide by (1 - t)^n: n successive divisions by (1 - t), i.e. prefix sums
    for (std::size_t v = 0; v < nvars; ++v)
        for (std::int64_t k = 1; k <= D; ++k) num[k] += num[k - 1];
    return num;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

RegularityVerdict hilbert_regularity_check(const std::vector<HomogeneousPoly>& gens,
                                           std::int64_t degree_bound,
                                           const TropicalOrder& order) {
    if (context_of(gens).backend != Backend::Exact)
        throw BackendError("regularity check runs on the exact backend only");
    std::vector<std::int64_t> degs;
    for (const auto& g : gens) degs.push_back(g.degree());
    std::size_t n = gens.front().nvars();
    std::vector<std::int64_t> quot = regular_quotient_dims(degs, n, degree_bound);

    RegularityVerdict verdict;
    for (std::int64_t d = 1; d <= degree_bound; ++d) {
        std::int64_t dim_ad = binomial(static_cast<std::int64_t>(n) + d - 1,
                                       static_cast<std::int64_t>(n) - 1);
        std::int64_t expected = dim_ad - quot[d];
        MacaulayMatrix M = build_full_macaulay(gens, d, order);
        auto [reduced, trace] = tropical_row_echelon(std::move(M), {});
        std::int64_t observed = static_cast<std::int64_t>(trace.pivots.size());
        verdict.expected_ranks.push_back(expected);
        verdict.observed_ranks.push_back(observed);
        if (observed != expected && verdict.regular) {
            verdict.regular = false;
            verdict.first_failure_degree = d;
        }
    }
    return verdict;
}

} // namespace tropgb
