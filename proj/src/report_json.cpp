#include "tropgb/report_json.hpp"

#include <sstream>

namespace tropgb {

using nlohmann::json;

std::string algorithm_name(Algorithm a) {
    return a == Algorithm::Naive ? "naive" : "sigbased";
}

namespace {

json mon_json(const Monomial& m, const std::vector<std::string>& vars) {
    return m.str(vars);
}

json status_json(const RunStatus& st) {
    json out;
    switch (st.kind) {
    case RunStatus::Kind::Exact:
        out["kind"] = "exact";
        break;
    case RunStatus::Kind::Capped:
        out["kind"] = "capped";
        out["min_output_precision"] = st.capped_min_precision.str();
        break;
    case RunStatus::Kind::Failed:
        out["kind"] = "failed";
        out["reason"] = st.message;
        out["at_degree"] = st.fail_degree;
        out["at_step"] = st.fail_step;
        break;
    }
    return out;
}

json trace_json(const ReductionTrace& t, const std::vector<std::string>& vars) {
    json pivots = json::array();
    for (const auto& p : t.pivots) {
        pivots.push_back({{"row", p.row},
                          {"col", p.col},
                          {"monomial", p.col_mon.str(vars)},
                          {"pivot", print_scalar(p.pivot)},
                          {"valuation", p.pivot_val},
                          {"term_value", p.term_value}});
    }
    json swaps = json::array();
    for (const auto& [a, b] : t.row_swaps) swaps.push_back({a, b});
    return {{"pivots", pivots},
            {"loss", t.loss},
            {"row_swaps", swaps},
            {"pivot_columns", t.pivot_cols},
            {"zero_rows", t.zero_rows},
            {"presumed_zero_rows", t.presumed_zero_rows},
            {"surplus_rows", t.surplus_rows}};
}

} // namespace

json report_to_json(const GroebnerReport& report, const ProblemFile& problem,
                    const RunSettings& settings) {
    const auto& vars = problem.vars;
    json doc;
    doc["schema_version"] = 1;
    doc["problem"] = {{"p", problem.prime},
                      {"vars", vars},
                      {"w", problem.order.weight},
                      {"tiebreak", tiebreak_name(problem.order.tiebreak)},
                      {"mode", problem.capped
                                   ? json{{"kind", "capped"},
                                          {"precision", problem.capped_precision}}
                                   : json{{"kind", "exact"}}},
                      {"degree_bound", report.degree_bound}};
    doc["settings"] = {{"algorithm", algorithm_name(settings.algorithm)},
                       {"carry", settings.driver.carry == Carry::Raw ? "raw" : "reduced"},
                       {"pivot_pool", settings.driver.pivot_pool == PivotPool::FullMacaulay
                                          ? "full-macaulay"
                                          : "f5"}};
    doc["status"] = status_json(report.status);
    doc["generator_order"] = report.generator_order;

    json basis = json::array();
    for (const auto& g : report.basis) {
        basis.push_back({{"degree", g.degree},
                         {"step", g.step},
                         {"leading_monomial", g.leading.mon.str(vars)},
                         {"leading_coefficient", print_scalar(g.leading.coeff)},
                         {"poly", g.poly.str(vars, problem.order)}});
    }
    doc["basis"] = basis;

    json lm_min = json::array();
    for (const auto& m : report.lm_minimal) lm_min.push_back(mon_json(m, vars));
    doc["lm_minimal"] = lm_min;

    json per_degree = json::object();
    for (const auto& [d, lms] : report.per_degree_lms) {
        json arr = json::array();
        for (const auto& m : lms) arr.push_back(mon_json(m, vars));
        per_degree[std::to_string(d)] = arr;
    }
    doc["per_degree_lms"] = per_degree;

    json steps = json::array();
    for (const auto& s : report.steps) {
        json lms = json::array();
        for (const auto& m : s.lms) lms.push_back(mon_json(m, vars));
        steps.push_back({{"d", s.d},
                         {"i", s.i},
                         {"rows", s.rows},
                         {"cols", s.cols},
                         {"new_rows", s.new_rows},
                         {"lms", lms},
                         {"trace", trace_json(s.trace, vars)}});
    }
    doc["steps"] = steps;
    doc["max_step_loss"] = report.max_step_loss;
    return doc;
}

void attach_ledger(nlohmann::json& doc, const PrecisionLedger& ledger) {
    json cells = json::array();
    for (const auto& c : ledger.cells) {
        cells.push_back({{"d", c.d},
                         {"i", c.i},
                         {"rows", c.rows},
                         {"cols", c.cols},
                         {"delta", c.delta},
                         {"delta_from_minors", c.delta_from_minors},
                         {"observed_loss", c.observed_loss},
                         {"spread", c.spread},
                         {"box", c.box}});
    }
    doc["precision_ledger"] = {{"cells", cells},
                               {"prec_bound", ledger.prec_bound},
                               {"loss_bound", ledger.loss_bound}};
}

void attach_oracle_agreement(nlohmann::json& doc, bool agrees) {
    doc["oracle_agreement"] = agrees;
}

std::string report_to_text(const GroebnerReport& report, const ProblemFile& problem,
                           const RunSettings& settings) {
    std::ostringstream out;
    const auto& vars = problem.vars;
    out << "algorithm " << algorithm_name(settings.algorithm) << ", degree bound "
        << report.degree_bound << "\n";
    switch (report.status.kind) {
    case RunStatus::Kind::Exact:
        out << "status: exact\n";
        break;
    case RunStatus::Kind::Capped:
        out << "status: capped, min output precision "
            << report.status.capped_min_precision.str() << "\n";
        break;
    case RunStatus::Kind::Failed:
        out << "status: FAILED (precision exhausted) at degree "
            << report.status.fail_degree << ", step " << report.status.fail_step
            << "\n  " << report.status.message << "\n";
        break;
    }
    out << "minimal leading monomials:";
    for (const auto& m : report.lm_minimal) out << " " << m.str(vars);
    out << "\nbasis (" << report.basis.size() << " elements):\n";
    for (const auto& g : report.basis) {
        out << "  [d=" << g.degree << " i=" << g.step << "] LM=" << g.leading.mon.str(vars)
            << "  " << g.poly.str(vars, problem.order) << "\n";
    }
    out << "per-degree reductions:\n";
    for (const auto& s : report.steps) {
        out << "  d=" << s.d << " i=" << s.i << ": " << s.rows << "x" << s.cols
            << " (+" << s.new_rows << " rows), pivots " << s.trace.pivots.size()
            << ", loss " << s.trace.loss;
        if (!s.trace.zero_rows.empty())
            out << ", zero rows " << s.trace.zero_rows.size();
        if (!s.trace.presumed_zero_rows.empty())
            out << ", presumed-zero rows " << s.trace.presumed_zero_rows.size();
        out << "\n";
    }
    out << "max per-reduction loss: " << report.max_step_loss << "\n";
    return out.str();
}

} // namespace tropgb
