#include "tropgb/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropgb {

namespace {

struct SortedGens {
    std::vector<HomogeneousPoly> gens;
    std::vector<int> original_index; // 1-based
};

SortedGens sort_by_degree(std::vector<HomogeneousPoly> gens) {
    if (gens.empty()) throw DomainError("empty generator list");
    for (const auto& g : gens)
        if (g.is_zero()) throw DomainError("zero polynomial among the generators");
    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&gens](std::size_t a, std::size_t b) {
        return gens[a].degree() < gens[b].degree();
    });
    SortedGens out;
    for (std::size_t k : idx) {
        out.gens.push_back(std::move(gens[k]));
        out.original_index.push_back(static_cast<int>(k) + 1);
    }
    return out;
}

void validate_inputs(const std::vector<HomogeneousPoly>& gens, std::int64_t D,
                     const TropicalOrder& order) {
    std::size_t nvars = gens.front().nvars();
    if (order.nvars() != nvars)
        throw DomainError("weight vector length does not match variable count");
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw DomainError("generators over different rings");
        if (g.degree() > D)
            throw DomainError("degree bound below the largest generator degree");
    }
    context_of(gens); // verifies backend uniformity
}

/// Sorted-unique monomial set with binary-search membership.
struct MonSet {
    std::vector<Monomial> items; // structurally sorted

    static MonSet from(std::vector<Monomial> ms) {
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        return {std::move(ms)};
    }
    bool contains(const Monomial& m) const {
        return std::binary_search(items.begin(), items.end(), m);
    }
    std::size_t size() const { return items.size(); }
};

std::vector<Monomial> pivot_lms(const ReductionTrace& trace, const TropicalOrder& order) {
    std::vector<Monomial> out;
    out.reserve(trace.pivots.size());
    for (const auto& p : trace.pivots) out.push_back(p.col_mon);
    std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
        return order.unit_term_cmp(a, b) > 0;
    });
    return out;
}

/// Shared per-step bookkeeping: records the step, enforces the no-zero-row
/// contract of capped F5 runs, and collects basis rows with new leading
/// monomials.
class Collector {
public:
    Collector(GroebnerReport& report, bool capped) : report_(report), capped_(capped) {}

    void finish_step(std::int64_t d, int i, const MacaulayMatrix& reduced,
                     ReductionTrace trace, std::size_t new_rows, bool expect_full_rank) {
        if (capped_ && expect_full_rank &&
            (!trace.presumed_zero_rows.empty() || !trace.zero_rows.empty())) {
            std::size_t r = trace.presumed_zero_rows.empty()
                                ? trace.zero_rows.front()
                                : trace.presumed_zero_rows.front();
            throw PrecisionError(
                "row " + std::to_string(r) + " of the degree-" + std::to_string(d) +
                    " matrix at step " + std::to_string(i) +
                    " is indistinguishable from zero: the rank cannot be certified "
                    "at this precision",
                static_cast<int>(d), i);
        }
        StepRecord rec;
        rec.d = d;
        rec.i = i;
        rec.rows = reduced.rows();
        rec.cols = reduced.cols();
        rec.new_rows = new_rows;
        rec.lms = pivot_lms(trace, reduced.order());
        report_.max_step_loss = std::max(report_.max_step_loss, trace.loss);

        for (const auto& p : trace.pivots) {
            if (seen_lms_.count(p.col_mon)) continue;
            seen_lms_.insert(p.col_mon);
            HomogeneousPoly poly = reduced.row_as_poly(p.row);
            Term lead{p.pivot, p.col_mon};
            if (!capped_) { // normalize exported basis rows in exact mode
                Scalar inv = Scalar::exact_int(1, p.pivot.prime()) / p.pivot;
                poly = poly.scale(inv);
                lead.coeff = Scalar::exact_int(1, p.pivot.prime());
            }
            report_.basis.push_back(
                {std::move(poly), std::move(lead), d, i, report_.steps.size()});
        }
        rec.trace = std::move(trace);
        report_.steps.push_back(std::move(rec));
    }

    std::vector<Monomial> all_lms() const {
        return std::vector<Monomial>(seen_lms_.begin(), seen_lms_.end());
    }

private:
    GroebnerReport& report_;
    bool capped_;
    std::set<Monomial> seen_lms_;
};

void finalize_report(GroebnerReport& report, bool capped, Collector& collector) {
    report.lm_minimal = minimalize_lm(collector.all_lms());
    if (capped && report.status.kind != RunStatus::Kind::Failed) {
        report.status.kind = RunStatus::Kind::Capped;
        ExtVal minp = ExtVal::infinity();
        for (const auto& g : report.basis)
            for (const auto& [m, c] : g.poly.terms()) minp = min(minp, c.prec_abs());
        report.status.capped_min_precision = minp;
    }
}

} // namespace

std::vector<Monomial> minimalize_lm(const std::vector<Monomial>& lms) {
    std::vector<Monomial> sorted = lms;
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : sorted) {
        bool divisible = false;
        for (const Monomial& k : kept) {
            if (k.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(m);
    }
    return kept;
}

std::vector<Monomial> f5_row_filter(std::size_t nvars, std::int64_t mult_degree,
                                    const std::vector<Monomial>& lm_prev,
                                    const TropicalOrder& order) {
    MonSet prev = MonSet::from(lm_prev);
    std::vector<Monomial> mult = enumerate_monomials(nvars, mult_degree, order);
    std::reverse(mult.begin(), mult.end()); // increasing
    std::vector<Monomial> kept;
    for (const Monomial& m : mult)
        if (!prev.contains(m)) kept.push_back(m);
    return kept;
}

std::int64_t macaulay_bound(const std::vector<HomogeneousPoly>& gens) {
    std::int64_t s = 1;
    for (const auto& g : gens) s += g.degree() - 1;
    return s;
}

GroebnerReport tropical_mf5(std::vector<HomogeneousPoly> gens_in, std::int64_t D,
                            const TropicalOrder& order, const DriverOptions& opts) {
    SortedGens sorted = sort_by_degree(std::move(gens_in));
    const std::vector<HomogeneousPoly>& gens = sorted.gens;
    validate_inputs(gens, D, order);
    const std::size_t nvars = gens.front().nvars();
    const int s = static_cast<int>(gens.size());
    const FieldContext ctx = context_of(gens);
    const bool capped = ctx.backend == Backend::Capped;

    GroebnerReport report;
    report.generator_order = sorted.original_index;
    report.degree_bound = D;
    report.status.kind = capped ? RunStatus::Kind::Capped : RunStatus::Kind::Exact;
    Collector collector(report, capped);

    // lm_sets[d][i] = leading monomials of the reduced step (d, i); i = 0 empty.
    std::vector<std::vector<MonSet>> lm_sets(
        static_cast<std::size_t>(D) + 1, std::vector<MonSet>(gens.size() + 1));

    try {
        for (std::int64_t d = 0; d <= D; ++d) {
            // carry between consecutive steps of the same degree
            std::optional<MacaulayMatrix> carried_reduced;
            std::vector<RowProvenance> carried_raw;

            for (int i = 1; i <= s; ++i) {
                const HomogeneousPoly& f = gens[i - 1];
                std::vector<Monomial> new_multipliers;
                if (d >= f.degree()) {
                    new_multipliers =
                        f5_row_filter(nvars, d - f.degree(),
                                      lm_sets[d - f.degree()][i - 1].items, order);
                }

                MacaulayMatrix M(nvars, d, order, ctx);
                std::size_t expected_pivots = 0;
                if (opts.pivot_pool == PivotPool::FullMacaulay) {
                    std::vector<HomogeneousPoly> prefix(gens.begin(), gens.begin() + i);
                    M = build_full_macaulay(prefix, d, order);
                    // rank implied by the F5 criterion
                    std::size_t target = 0;
                    for (int j = 1; j <= i; ++j) {
                        const HomogeneousPoly& fj = gens[j - 1];
                        if (d < fj.degree()) continue;
                        std::size_t all = enumerate_monomials(nvars, d - fj.degree(), order).size();
                        target += all - lm_sets[d - fj.degree()][j - 1].size();
                    }
                    expected_pivots = target;
                } else if (opts.carry == Carry::Reduced) {
                    if (carried_reduced) {
                        // carry the non-zero rows of the previous reduced matrix
                        for (std::size_t r = 0; r < carried_reduced->rows(); ++r) {
                            HomogeneousPoly rp = carried_reduced->row_as_poly(r);
                            if (rp.is_zero()) continue;
                            M.append_row(rp, carried_reduced->provenance(r));
                        }
                    }
                    for (const Monomial& m : new_multipliers)
                        M.append_row(f.multiply_by_monomial(m), {i, m});
                    expected_pivots = M.rows();
                } else { // Carry::Raw
                    for (const Monomial& m : new_multipliers)
                        carried_raw.push_back({i, m});
                    for (const auto& pr : carried_raw)
                        M.append_row(
                            gens[pr.gen_index - 1].multiply_by_monomial(pr.multiplier),
                            pr);
                    expected_pivots = M.rows();
                }

                ReduceOptions ropts;
                if (opts.pivot_pool == PivotPool::FullMacaulay)
                    ropts.rank_target = expected_pivots;
                std::pair<MacaulayMatrix, ReductionTrace> result =
                    [&]() -> std::pair<MacaulayMatrix, ReductionTrace> {
                    try {
                        return tropical_row_echelon(std::move(M), ropts);
                    } catch (const PrecisionError& e) {
                        throw PrecisionError(e.what(), static_cast<int>(d), i);
                    }
                }();
                auto& [reduced, trace] = result;

                if (opts.pivot_pool == PivotPool::FullMacaulay && capped &&
                    trace.pivots.size() < expected_pivots)
                    throw PrecisionError(
                        "only " + std::to_string(trace.pivots.size()) + " of " +
                            std::to_string(expected_pivots) +
                            " expected pivots could be certified at this precision",
                        static_cast<int>(d), i);

                lm_sets[d][i] = MonSet::from(pivot_lms(trace, order));
                bool expect_full_rank = opts.pivot_pool == PivotPool::F5;
                collector.finish_step(d, i, reduced, std::move(trace),
                                      new_multipliers.size(), expect_full_rank);
                if (opts.pivot_pool != PivotPool::FullMacaulay &&
                    opts.carry == Carry::Reduced)
                    carried_reduced = std::move(reduced);
            }
            report.per_degree_lms[d] = report.steps.back().lms;
        }
    } catch (const PrecisionError& e) {
        report.status.kind = RunStatus::Kind::Failed;
        report.status.message = e.what();
        report.status.fail_degree = e.degree();
        report.status.fail_step = e.step();
    }

    finalize_report(report, capped, collector);
    return report;
}

GroebnerReport tropical_mf5_sig(std::vector<HomogeneousPoly> gens_in, std::int64_t D,
                                const TropicalOrder& order) {
    SortedGens sorted = sort_by_degree(std::move(gens_in));
    const std::vector<HomogeneousPoly>& gens = sorted.gens;
    validate_inputs(gens, D, order);
    const std::size_t nvars = gens.front().nvars();
    const int s = static_cast<int>(gens.size());
    const FieldContext ctx = context_of(gens);
    const bool capped = ctx.backend == Backend::Capped;

    GroebnerReport report;
    report.generator_order = sorted.original_index;
    report.degree_bound = D;
    report.status.kind = capped ? RunStatus::Kind::Capped : RunStatus::Kind::Exact;
    Collector collector(report, capped);

    std::vector<std::vector<MonSet>> lm_sets(
        static_cast<std::size_t>(D) + 1, std::vector<MonSet>(gens.size() + 1));

    // reduced matrices of the previous degree, per step i (1-based)
    std::vector<std::optional<MacaulayMatrix>> prev_degree(gens.size() + 1);

    try {
        for (std::int64_t d = 0; d <= D; ++d) {
            std::vector<std::optional<MacaulayMatrix>> cur_degree(gens.size() + 1);
            std::optional<MacaulayMatrix> carried; // reduced (d, i-1)

            for (int i = 1; i <= s; ++i) {
                const HomogeneousPoly& f = gens[i - 1];
                MacaulayMatrix M(nvars, d, order, ctx);
                if (carried) {
                    for (std::size_t r = 0; r < carried->rows(); ++r)
                        M.append_row(carried->row_as_poly(r), carried->provenance(r),
                                     carried->signature(r));
                }

                // rows of signature (alpha, i)
                struct NewRow {
                    HomogeneousPoly poly;
                    Signature sig;
                    RowProvenance prov;
                };
                std::vector<NewRow> fresh;
                std::set<Monomial> used_sigs;
                if (d == f.degree()) {
                    Monomial one = Monomial::one(nvars);
                    if (!lm_sets[0][i - 1].contains(one))
                        fresh.push_back({f, {one, i}, {i, one}});
                } else if (d > f.degree()) {
                    const auto& prev = prev_degree[i];
                    if (prev) {
                        for (std::size_t r = 0; r < prev->rows(); ++r) {
                            if (prev->signature(r).index != i) continue;
                            for (std::size_t v = 0; v < nvars; ++v) {
                                std::vector<std::int32_t> e(nvars, 0);
                                e[v] = 1;
                                Monomial xv(e);
                                Monomial alpha = prev->signature(r).mon * xv;
                                if (lm_sets[d - f.degree()][i - 1].contains(alpha))
                                    continue;
                                if (used_sigs.count(alpha)) continue;
                                used_sigs.insert(alpha);
                                fresh.push_back({prev->row_as_poly(r).multiply_by_monomial(xv),
                                                 {alpha, i},
                                                 {i, alpha}});
                            }
                        }
                    }
                }
                std::sort(fresh.begin(), fresh.end(),
                          [&order](const NewRow& a, const NewRow& b) {
                              return signature_compare(a.sig, b.sig, order) < 0;
                          });
                for (auto& row : fresh)
                    M.append_row(row.poly, std::move(row.prov), std::move(row.sig));

                std::pair<MacaulayMatrix, ReductionTrace> result =
                    [&]() -> std::pair<MacaulayMatrix, ReductionTrace> {
                    try {
                        return tropical_lup(std::move(M), {});
                    } catch (const PrecisionError& e) {
                        throw PrecisionError(e.what(), static_cast<int>(d), i);
                    }
                }();
                auto& [reduced, trace] = result;
                lm_sets[d][i] = MonSet::from(pivot_lms(trace, order));
                collector.finish_step(d, i, reduced, std::move(trace), fresh.size(),
                                      /*expect_full_rank=*/true);
                cur_degree[i] = reduced;
                carried = std::move(reduced);
            }
            report.per_degree_lms[d] = report.steps.back().lms;
            prev_degree = std::move(cur_degree);
        }
    } catch (const PrecisionError& e) {
        report.status.kind = RunStatus::Kind::Failed;
        report.status.message = e.what();
        report.status.fail_degree = e.degree();
        report.status.fail_step = e.step();
    }

    finalize_report(report, capped, collector);
    return report;
}

} // namespace tropgb
