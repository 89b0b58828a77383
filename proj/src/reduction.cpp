#include "tropgb/reduction.hpp"

#include <algorithm>
#include <utility>

namespace tropgb {

namespace {

struct Candidate {
    std::size_t row = 0, col = 0;
    std::int64_t value = 0;
    std::int64_t pivot_val = 0;
    bool found = false;
};

/// Checks the precision bound for every coefficient that is
/// indistinguishable from zero among the given rows: an O(p^m) entry in
/// column beta is certainly smaller than the chosen pivot term only when
/// m + w.beta strictly exceeds the pivot's term value.
void check_unknowns(const MacaulayMatrix& M, const std::vector<std::size_t>& rows,
                    std::int64_t chosen_value, std::size_t step) {
    for (std::size_t r : rows) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            const Scalar& e = M.at(r, c);
            if (!e.is_unknown_zero()) continue;
            std::int64_t bound =
                e.prec_abs().finite() + M.order().weight_dot(M.mon()[c]);
            if (bound <= chosen_value)
                throw PrecisionError(
                    "precision exhausted during reduction of the degree-" +
                        std::to_string(M.degree()) + " matrix at elimination step " +
                        std::to_string(step) + ": entry O(p^" +
                        std::to_string(e.prec_abs().finite()) + ") in row " +
                        std::to_string(r) + " cannot be separated from the pivot",
                    static_cast<int>(M.degree()));
        }
    }
}

/// Eliminates the known entries of column `col` below row `prow` using that
/// row. Eliminated positions become structural zeros; entries that are
/// indistinguishable from zero are left in place (they already passed the
/// precision check against the pivot).
void eliminate_below(MacaulayMatrix& M, std::size_t prow, std::size_t col,
                     const std::vector<std::size_t>& below) {
    const Scalar pivot = M.at(prow, col);
    for (std::size_t r : below) {
        const Scalar& e = M.at(r, col);
        if (e.is_structural_zero() || e.is_unknown_zero()) continue;
        Scalar q = e / pivot;
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c == col) continue;
            const Scalar& p = M.at(prow, c);
            if (p.is_structural_zero()) continue;
            M.at(r, c) = M.at(r, c) - q * p;
        }
        M.at(r, col) = Scalar::zero_like(pivot);
    }
}

bool row_all_structural_zero(const MacaulayMatrix& M, std::size_t r) {
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (!M.at(r, c).is_structural_zero()) return false;
    return true;
}

bool row_has_known_entry(const MacaulayMatrix& M, std::size_t r) {
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (M.at(r, c).distinguishable_from_zero()) return true;
    return false;
}

void classify_leftover(const MacaulayMatrix& M, const std::vector<std::size_t>& rows,
                       bool stopped_early, ReductionTrace& trace) {
    for (std::size_t r : rows) {
        if (row_all_structural_zero(M, r))
            trace.zero_rows.push_back(r);
        else if (!row_has_known_entry(M, r))
            trace.presumed_zero_rows.push_back(r);
        else if (stopped_early)
            trace.surplus_rows.push_back(r);
        else
            throw DomainError("reduction left a row with known entries");
    }
}

} // namespace

std::pair<MacaulayMatrix, ReductionTrace>
tropical_row_echelon(MacaulayMatrix M, const ReduceOptions& opts) {
    if (M.has_signatures())
        throw DomainError("row-echelon reduction would reorder signed rows");
    ReductionTrace trace;
    std::vector<bool> col_used(M.cols(), false);
    std::size_t k = 0; // rows < k are settled pivot rows

    while (k < M.rows()) {
        if (opts.rank_target && trace.pivots.size() >= *opts.rank_target) break;

        std::vector<std::size_t> active;
        for (std::size_t r = k; r < M.rows(); ++r) active.push_back(r);

        Candidate best;
        for (std::size_t r : active) {
            for (std::size_t c = 0; c < M.cols(); ++c) {
                if (col_used[c]) continue;
                const Scalar& e = M.at(r, c);
                if (!e.distinguishable_from_zero()) continue;
                std::int64_t pv = e.valuation().value.finite();
                std::int64_t value = pv + M.order().weight_dot(M.mon()[c]);
                bool better = false;
                if (!best.found || value < best.value) {
                    better = true;
                } else if (value == best.value && c != best.col) {
                    better = M.order().classical_cmp(M.mon()[c], M.mon()[best.col]) > 0;
                } // same column, same value: earlier row wins (scan order)
                if (better) best = {r, c, value, pv, true};
            }
        }
        if (!best.found) break;

        check_unknowns(M, active, best.value, trace.pivots.size());

        if (best.row != k) {
            M.swap_rows(k, best.row);
            trace.row_swaps.emplace_back(k, best.row);
        }
        col_used[best.col] = true;
        trace.pivot_cols.push_back(best.col);
        trace.pivots.push_back({k, best.col, M.mon()[best.col], M.at(k, best.col),
                                best.value, best.pivot_val});
        trace.loss += best.pivot_val;

        std::vector<std::size_t> below;
        for (std::size_t r = k + 1; r < M.rows(); ++r) below.push_back(r);
        eliminate_below(M, k, best.col, below);
        ++k;
    }

    std::vector<std::size_t> leftover;
    for (std::size_t r = k; r < M.rows(); ++r) leftover.push_back(r);
    classify_leftover(M, leftover, opts.rank_target.has_value(), trace);
    return {std::move(M), std::move(trace)};
}

std::pair<MacaulayMatrix, ReductionTrace>
tropical_lup(MacaulayMatrix M, const ReduceOptions& opts) {
    if (M.has_signatures()) {
        for (std::size_t r = 1; r < M.rows(); ++r)
            if (signature_compare(M.signature(r - 1), M.signature(r), M.order()) >= 0)
                throw DomainError("rows are not in strictly increasing signature order");
    }
    ReductionTrace trace;
    std::vector<bool> col_used(M.cols(), false);

    for (std::size_t r = 0; r < M.rows(); ++r) {
        if (opts.rank_target && trace.pivots.size() >= *opts.rank_target) {
            classify_leftover(M, {r}, true, trace);
            continue;
        }
        Candidate best;
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (col_used[c]) continue;
            const Scalar& e = M.at(r, c);
            if (!e.distinguishable_from_zero()) continue;
            std::int64_t pv = e.valuation().value.finite();
            std::int64_t value = pv + M.order().weight_dot(M.mon()[c]);
            bool better =
                !best.found || value < best.value ||
                (value == best.value &&
                 M.order().classical_cmp(M.mon()[c], M.mon()[best.col]) > 0);
            if (better) best = {r, c, value, pv, true};
        }
        if (!best.found) {
            classify_leftover(M, {r}, false, trace);
            continue;
        }

        check_unknowns(M, {r}, best.value, trace.pivots.size());

        col_used[best.col] = true;
        trace.pivot_cols.push_back(best.col);
        trace.pivots.push_back({r, best.col, M.mon()[best.col], M.at(r, best.col),
                                best.value, best.pivot_val});
        trace.loss += best.pivot_val;

        std::vector<std::size_t> below;
        for (std::size_t i = r + 1; i < M.rows(); ++i) below.push_back(i);
        eliminate_below(M, r, best.col, below);
    }
    return {std::move(M), std::move(trace)};
}

} // namespace tropgb
