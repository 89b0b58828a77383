#include "tropgb/precision.hpp"

#include <algorithm>
#include <functional>

namespace tropgb {

std::int64_t lt_precision_bound(const HomogeneousPoly& f, const TropicalOrder& order) {
    if (f.is_zero()) throw DomainError("precision bound of the zero polynomial");
    if (context_of({f}).backend != Backend::Exact)
        throw BackendError("precision bound is computed from exact data");
    Term lt = leading_term(f, order);
    std::int64_t val = lt.coeff.valuation().value.finite();
    // min of w.beta over the degree-d simplex is attained at a vertex
    std::int64_t wmin = *std::min_element(order.weight.begin(), order.weight.end());
    std::int64_t min_beta = wmin * f.degree();
    return val + order.weight_dot(lt.mon) - min_beta;
}

namespace {

ExtVal det_valuation(std::vector<std::vector<BigRat>> a, std::int64_t prime) {
    const std::size_t n = a.size();
    BigRat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return ExtVal::infinity();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            BigRat q = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= q * a[k][c];
        }
    }
    return ExactScalar(det, prime).valuation();
}

void row_subsets(std::size_t nrows, std::size_t size,
                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(size);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t k) {
        if (k == size) {
            fn(pick);
            return;
        }
        for (std::size_t r = start; r + (size - k) <= nrows; ++r) {
            pick[k] = r;
            rec(r + 1, k + 1);
        }
    };
    rec(0, 0);
}

} // namespace

ExtVal minor_valuation_oracle(const MacaulayMatrix& M,
                              const std::vector<std::size_t>& columns,
                              std::size_t row_guard) {
    if (M.context().backend != Backend::Exact)
        throw BackendError("minor enumeration runs on the exact backend only");
    if (M.rows() > row_guard)
        throw GuardError("minor enumeration guard exceeded: " +
                         std::to_string(M.rows()) + " rows");
    if (columns.empty()) return ExtVal(0);
    if (columns.size() > M.rows()) return ExtVal::infinity();

    ExtVal best = ExtVal::infinity();
    row_subsets(M.rows(), columns.size(), [&](const std::vector<std::size_t>& rows) {
        std::vector<std::vector<BigRat>> sub(rows.size(),
                                             std::vector<BigRat>(columns.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < columns.size(); ++c)
                sub[r][c] = M.at(rows[r], columns[c]).as_exact().value();
        best = min(best, det_valuation(std::move(sub), M.context().prime));
    });
    return best;
}

namespace {

std::vector<HomogeneousPoly> degree_sorted(std::vector<HomogeneousPoly> gens) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const HomogeneousPoly& a, const HomogeneousPoly& b) {
                         return a.degree() < b.degree();
                     });
    return gens;
}

} // namespace

PrecisionLedger sufficient_precision(const std::vector<HomogeneousPoly>& gens_in,
                                     std::int64_t D, const TropicalOrder& order) {
    if (context_of(gens_in).backend != Backend::Exact)
        throw BackendError("precision analysis runs on exact input");
    std::vector<HomogeneousPoly> gens = degree_sorted(gens_in);
    const std::size_t nvars = gens.front().nvars();
    const FieldContext ctx = context_of(gens);
    const int s = static_cast<int>(gens.size());

    PrecisionLedger ledger;
    std::int64_t wmin = *std::min_element(order.weight.begin(), order.weight.end());

    // lm_sets[d][i]: leading monomials of the reduced cell (d, i)
    std::vector<std::vector<std::vector<Monomial>>> lm_sets(
        static_cast<std::size_t>(D) + 1,
        std::vector<std::vector<Monomial>>(gens.size() + 1));

    for (std::int64_t d = 0; d <= D; ++d) {
        std::vector<RowProvenance> raw; // accumulated raw rows of this degree
        for (int i = 1; i <= s; ++i) {
            const HomogeneousPoly& f = gens[i - 1];
            if (d >= f.degree()) {
                std::vector<Monomial> mult =
                    f5_row_filter(nvars, d - f.degree(),
                                  lm_sets[d - f.degree()][i - 1], order);
                for (const Monomial& m : mult) raw.push_back({i, m});
            }
            MacaulayMatrix M(nvars, d, order, ctx);
            for (const auto& pr : raw)
                M.append_row(gens[pr.gen_index - 1].multiply_by_monomial(pr.multiplier),
                             pr);
            if (M.rows() == 0) {
                lm_sets[d][i] = {};
                continue;
            }
            auto [reduced, trace] = tropical_row_echelon(M, {});

            std::vector<Monomial> lms;
            std::vector<std::size_t> lt_cols;
            std::int64_t max_walpha = INT64_MIN;
            for (const auto& p : trace.pivots) {
                lms.push_back(p.col_mon);
                lt_cols.push_back(p.col);
                max_walpha = std::max(max_walpha, order.weight_dot(p.col_mon));
            }
            std::sort(lms.begin(), lms.end());
            lm_sets[d][i] = lms;
            if (trace.pivots.empty()) continue;

            PrecisionCell cell;
            cell.d = d;
            cell.i = i;
            cell.rows = M.rows();
            cell.cols = M.cols();
            cell.observed_loss = trace.loss;
            cell.spread = max_walpha - wmin * d;
            try {
                std::sort(lt_cols.begin(), lt_cols.end());
                ExtVal delta = minor_valuation_oracle(M, lt_cols);
                cell.delta = delta.finite(); // pivot rows witness a non-zero minor
                cell.delta_from_minors = true;
            } catch (const GuardError&) {
                cell.delta = trace.loss;
                cell.delta_from_minors = false;
            }
            cell.box = 2 * cell.delta + cell.spread;
            ledger.prec_bound = ledger.cells.empty()
                                    ? cell.box
                                    : std::max(ledger.prec_bound, cell.box);
            ledger.loss_bound = ledger.cells.empty()
                                    ? cell.delta
                                    : std::max(ledger.loss_bound, cell.delta);
            ledger.cells.push_back(std::move(cell));
        }
    }
    return ledger;
}

StabilityVerdict stability_check(const std::vector<HomogeneousPoly>& gens_exact,
                                 std::int64_t precision, const TropicalOrder& order,
                                 std::int64_t degree_bound) {
    StabilityVerdict verdict;
    verdict.ledger = sufficient_precision(gens_exact, degree_bound, order);
    verdict.required_output_precision = precision - verdict.ledger.loss_bound;
    if (precision <= verdict.ledger.prec_bound) {
        verdict.outcome = StabilityVerdict::Outcome::InsufficientPrecisionExpected;
        verdict.detail = "input precision " + std::to_string(precision) +
                         " does not exceed the sufficient bound " +
                         std::to_string(verdict.ledger.prec_bound);
        return verdict;
    }

    DriverOptions raw_opts;
    raw_opts.carry = Carry::Raw;
    GroebnerReport exact = tropical_mf5(gens_exact, degree_bound, order, raw_opts);

    std::vector<HomogeneousPoly> capped_gens;
    for (const auto& g : gens_exact) {
        HomogeneousPoly h(g.nvars(), g.degree());
        for (const auto& [m, c] : g.terms()) h.add_term(m, c.truncate(precision));
        capped_gens.push_back(std::move(h));
    }
    GroebnerReport capped = tropical_mf5(capped_gens, degree_bound, order, raw_opts);

    if (!capped.status.ok()) {
        verdict.outcome = StabilityVerdict::Outcome::Fail;
        verdict.detail = "capped run failed: " + capped.status.message;
        return verdict;
    }

    verdict.lm_match = exact.per_degree_lms == capped.per_degree_lms;
    verdict.min_output_precision = capped.status.capped_min_precision;
    bool prec_ok = verdict.min_output_precision >=
                   ExtVal(verdict.required_output_precision);
    if (verdict.lm_match && prec_ok) {
        verdict.outcome = StabilityVerdict::Outcome::Pass;
    } else {
        verdict.outcome = StabilityVerdict::Outcome::Fail;
        if (!verdict.lm_match)
            verdict.detail = "leading-monomial sets differ between exact and capped runs";
        else
            verdict.detail = "output precision " + verdict.min_output_precision.str() +
                             " below required " +
                             std::to_string(verdict.required_output_precision);
    }
    return verdict;
}

} // namespace tropgb
