#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropgb/experiment.hpp"
#include "tropgb/report_json.hpp"

namespace py = pybind11;
using namespace tropgb;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default:
        return py::none();
    }
}

RunSettings settings_from(const std::string& algorithm, const std::string& carry,
                          const std::string& pivot_pool) {
    RunSettings s;
    if (algorithm == "naive")
        s.algorithm = Algorithm::Naive;
    else if (algorithm == "sigbased")
        s.algorithm = Algorithm::SignatureBased;
    else
        throw DomainError("algorithm must be 'naive' or 'sigbased'");
    if (carry == "reduced")
        s.driver.carry = Carry::Reduced;
    else if (carry == "raw")
        s.driver.carry = Carry::Raw;
    else
        throw DomainError("carry must be 'reduced' or 'raw'");
    if (pivot_pool == "f5")
        s.driver.pivot_pool = PivotPool::F5;
    else if (pivot_pool == "full-macaulay")
        s.driver.pivot_pool = PivotPool::FullMacaulay;
    else
        throw DomainError("pivot_pool must be 'f5' or 'full-macaulay'");
    return s;
}

py::dict run_text(const std::string& problem_text, const std::string& algorithm,
                  const std::string& carry, const std::string& pivot_pool,
                  bool analyze_precision, bool oracle) {
    ProblemFile problem = parse_problem(problem_text);
    RunSettings settings = settings_from(algorithm, carry, pivot_pool);
    std::int64_t D = problem.resolved_degree_bound();
    GroebnerReport report =
        settings.algorithm == Algorithm::Naive
            ? tropical_mf5(problem.gens, D, problem.order, settings.driver)
            : tropical_mf5_sig(problem.gens, D, problem.order);
    nlohmann::json doc = report_to_json(report, problem, settings);
    if (analyze_precision) {
        if (problem.capped) throw DomainError("precision analysis requires exact mode");
        attach_ledger(doc, sufficient_precision(problem.gens, D, problem.order));
    }
    if (oracle) {
        if (problem.capped) throw DomainError("the oracle requires exact mode");
        FullMacaulayResult truth = full_macaulay_dgb(problem.gens, D, problem.order);
        bool agrees = report.status.ok();
        for (std::int64_t d = 1; agrees && d <= D; ++d) {
            auto it = report.per_degree_lms.find(d);
            agrees = it != report.per_degree_lms.end() &&
                     it->second == truth.per_degree_lms.at(d);
        }
        attach_oracle_agreement(doc, agrees);
    }
    return json_to_py(doc);
}

py::dict parse_problem_py(const std::string& text) {
    ProblemFile p = parse_problem(text);
    py::dict out;
    out["p"] = p.prime;
    out["vars"] = p.vars;
    out["w"] = p.order.weight;
    out["tiebreak"] = tiebreak_name(p.order.tiebreak);
    out["degree_bound"] = p.resolved_degree_bound();
    out["mode"] = p.capped ? "capped" : "exact";
    if (p.capped) out["precision"] = p.capped_precision;
    py::list gens;
    for (const auto& g : p.gens) gens.append(g.str(p.vars, p.order));
    out["gens"] = gens;
    out["canonical"] = print_problem(p);
    return out;
}

py::dict experiment_py(const std::string& config_text, py::object seed) {
    ExperimentConfig config = parse_experiment_config(config_text);
    if (!seed.is_none()) config.seed = seed.cast<std::uint64_t>();
    ExperimentResult r = run_experiment(config);
    py::dict out;
    out["max_loss"] = r.max_loss;
    {
        std::string s = numerator(r.mean_loss).str();
        if (denominator(r.mean_loss) != 1) s += "/" + denominator(r.mean_loss).str();
        out["mean_loss"] = s;
    }
    out["failures"] = r.failures;
    py::list losses;
    for (const auto& t : r.trials)
        losses.append(t.failed ? py::object(py::none()) : py::object(py::int_(t.loss)));
    out["trial_losses"] = losses;
    out["csv"] = experiment_csv(r);
    out["text"] = experiment_text(r);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tropical D-Groebner bases via Matrix-F5 over fields with p-adic "
              "valuation";

    // translators are tried most-recently-registered first, so the base
    // class goes first and the derived kinds shadow it
    py::register_exception<Error>(m, "TgbError", PyExc_RuntimeError);
    py::register_exception<PrecisionError>(m, "TgbPrecisionError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "TgbParseError", PyExc_ValueError);

    m.def("run", &run_text, py::arg("problem"), py::arg("algorithm") = "naive",
          py::arg("carry") = "reduced", py::arg("pivot_pool") = "f5",
          py::arg("analyze_precision") = false, py::arg("oracle") = false,
          "Run a problem given in the problem-file syntax; returns the report "
          "as a dict mirroring the JSON schema.");
    m.def("parse_problem", &parse_problem_py, py::arg("text"),
          "Parse and canonicalize a problem file.");
    m.def("run_experiment", &experiment_py, py::arg("config"),
          py::arg("seed") = py::none(),
          "Run a loss-in-precision experiment from a config file text.");
}
