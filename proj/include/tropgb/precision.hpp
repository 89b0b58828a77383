#pragma once

#include <string>
#include <vector>

#include "tropgb/groebner.hpp"

namespace tropgb {

/// Precision on the coefficients of f sufficient to determine its leading
/// term: val(LT coeff) + max over degree-d monomials beta of (alpha - beta).w.
/// Exact backend.
std::int64_t lt_precision_bound(const HomogeneousPoly& f, const TropicalOrder& order);

/// Smallest valuation over all maximal minors of M restricted to the given
/// columns (one minor per row subset of matching size). +infinity when every
/// such minor vanishes. Exact backend; guarded exhaustive enumeration.
ExtVal minor_valuation_oracle(const MacaulayMatrix& M,
                              const std::vector<std::size_t>& columns,
                              std::size_t row_guard = 12);

/// One (d, i) cell of the precision ledger.
struct PrecisionCell {
    std::int64_t d = 0;
    int i = 0;
    std::size_t rows = 0, cols = 0;
    /// Minimal leading-column minor valuation; when the minor enumeration
    /// guard was exceeded this falls back to the observed pivot loss and
    /// from_minors is false.
    std::int64_t delta = 0;
    bool delta_from_minors = true;
    /// Pivot-valuation sum of the exact dry-run reduction of this cell.
    std::int64_t observed_loss = 0;
    /// max over leading monomials alpha_k and degree-d monomials beta of
    /// (alpha_k - beta).w
    std::int64_t spread = 0;
    /// 2*delta + spread
    std::int64_t box = 0;
};

struct PrecisionLedger {
    std::vector<PrecisionCell> cells;
    /// max box over all cells: sufficient input precision.
    std::int64_t prec_bound = 0;
    /// max delta over all cells: bound on the loss in precision.
    std::int64_t loss_bound = 0;
};

/// Quantitative precision analysis over the F5-filtered matrices, assembled
/// in the raw-carry form and reduced in exact arithmetic. The input sequence
/// is assumed regular; that assumption is not verified here.
PrecisionLedger sufficient_precision(const std::vector<HomogeneousPoly>& gens,
                                     std::int64_t degree_bound,
                                     const TropicalOrder& order);

struct StabilityVerdict {
    enum class Outcome { Pass, Fail, InsufficientPrecisionExpected };
    Outcome outcome = Outcome::Fail;
    bool lm_match = false;
    ExtVal min_output_precision = ExtVal::infinity();
    std::int64_t required_output_precision = 0; // l - loss bound
    std::string detail;
    PrecisionLedger ledger;
};

/// Truncates the exact generators to absolute precision l, runs the capped
/// driver (raw carry, matching the ledger's matrices), and compares the
/// leading monomials and output precisions against the exact run.
StabilityVerdict stability_check(const std::vector<HomogeneousPoly>& gens_exact,
                                 std::int64_t precision, const TropicalOrder& order,
                                 std::int64_t degree_bound);

} // namespace tropgb
