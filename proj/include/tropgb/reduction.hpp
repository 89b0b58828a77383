#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tropgb/macaulay.hpp"

namespace tropgb {

struct PivotRecord {
    std::size_t row; // row index in the output matrix
    std::size_t col; // column index (labels are never physically swapped)
    Monomial col_mon;
    Scalar pivot;
    std::int64_t term_value; // val(pivot) + w . col_mon
    std::int64_t pivot_val;  // val(pivot)
};

struct ReductionTrace {
    std::vector<PivotRecord> pivots;
    /// Sum of pivot valuations.
    std::int64_t loss = 0;
    std::vector<std::pair<std::size_t, std::size_t>> row_swaps;
    /// Column permutation prefix: pivot_cols[k] is the column of the k-th pivot.
    std::vector<std::size_t> pivot_cols;
    /// Rows that reduced to exact (structural) zero.
    std::vector<std::size_t> zero_rows;
    /// Capped rows whose entries all became indistinguishable from zero.
    std::vector<std::size_t> presumed_zero_rows;
    /// Rows left unprocessed by an early rank-target stop.
    std::vector<std::size_t> surplus_rows;

    const PivotRecord* pivot_of_row(std::size_t r) const {
        for (const auto& p : pivots)
            if (p.row == r) return &p;
        return nullptr;
    }
};

struct ReduceOptions {
    /// Stop once this many pivots have been found (used when reducing full
    /// Macaulay matrices whose expected rank is known in advance).
    std::optional<std::size_t> rank_target;
};

/// Row-echelon reduction with the greatest-term pivot rule: pivot on the
/// entry whose term (entry times column monomial) is greatest over the whole
/// remaining submatrix, smallest row index on ties. Rows are swapped into
/// pivot order; zero rows sink to the bottom.
std::pair<MacaulayMatrix, ReductionTrace>
tropical_row_echelon(MacaulayMatrix M, const ReduceOptions& opts = {});

/// Signature-preserving variant: rows are processed in their given order
/// (which must be strictly increasing in signature when signatures are
/// present) and each row pivots on its own greatest term. Only earlier rows
/// are ever added to later ones, so signatures are preserved.
std::pair<MacaulayMatrix, ReductionTrace>
tropical_lup(MacaulayMatrix M, const ReduceOptions& opts = {});

} // namespace tropgb
