#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tropgb/experiment.hpp"
#include "tropgb/report_json.hpp"

using namespace tropgb;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitPrecisionExhausted = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << content;
}

int run_experiment_cmd(const std::string& config_path, std::optional<std::uint64_t> seed,
                       const std::string& json_path, const std::string& csv_path) {
    ExperimentConfig config = parse_experiment_config(slurp(config_path));
    if (seed) config.seed = *seed;
    ExperimentResult result = run_experiment(config);
    std::cout << experiment_text(result);
    if (!csv_path.empty()) write_file(csv_path, experiment_csv(result));
    if (!json_path.empty()) {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["experiment"] = {{"degrees", config.degrees},
                             {"p", config.prime},
                             {"w", config.weight},
                             {"tiebreak", tiebreak_name(config.tiebreak)},
                             {"D", config.resolved_degree_bound()},
                             {"precision", config.precision},
                             {"trials", config.trials},
                             {"seed", config.seed}};
        nlohmann::json trials = nlohmann::json::array();
        for (const auto& t : result.trials)
            trials.push_back({{"loss", t.loss}, {"failed", t.failed}});
        doc["trials"] = trials;
        doc["max_loss"] = result.max_loss;
        doc["mean_loss"] = [&] {
            std::string s = numerator(result.mean_loss).str();
            if (denominator(result.mean_loss) != 1)
                s += "/" + denominator(result.mean_loss).str();
            return s;
        }();
        doc["failures"] = result.failures;
        write_file(json_path, doc.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical D-Groebner bases of homogeneous ideals over fields "
                 "with p-adic valuation"};
    std::string problem_path;
    std::string algorithm = "naive";
    std::string carry = "reduced";
    std::string mode_override;
    std::string degree_bound_override;
    std::string pivot_pool = "f5";
    bool analyze_precision = false;
    bool oracle_check = false;
    std::optional<std::uint64_t> seed;
    std::string json_path;
    std::string csv_path;
    std::string experiment_path;

    app.add_option("problem", problem_path, "problem file");
    app.add_option("--algorithm", algorithm, "naive|sigbased")
        ->check(CLI::IsMember({"naive", "sigbased"}));
    app.add_option("--carry", carry, "reduced|raw (naive algorithm)")
        ->check(CLI::IsMember({"reduced", "raw"}));
    app.add_option("--mode", mode_override, "exact | capped=L (overrides the file)");
    app.add_option("--degree-bound", degree_bound_override,
                   "D | macaulay (overrides the file)");
    app.add_flag("--analyze-precision", analyze_precision,
                 "attach the precision ledger (exact mode)");
    app.add_option("--pivot-pool", pivot_pool, "f5|full-macaulay (naive algorithm)")
        ->check(CLI::IsMember({"f5", "full-macaulay"}));
    app.add_flag("--oracle", oracle_check,
                 "cross-check against the full-Macaulay ground truth (exact mode)");
    app.add_option("--seed", seed, "experiment master seed override");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--csv", csv_path, "write experiment CSV to this path");
    app.add_option("--experiment", experiment_path, "run an experiment config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!experiment_path.empty())
            return run_experiment_cmd(experiment_path, seed, json_path, csv_path);

        if (problem_path.empty()) {
            std::cerr << "error: a problem file (or --experiment) is required\n";
            return kExitInvalidInput;
        }
        ProblemFile problem = parse_problem(slurp(problem_path));

        if (!mode_override.empty()) {
            if (mode_override == "exact") {
                if (problem.capped)
                    throw DomainError(
                        "cannot override a capped problem file to exact mode "
                        "(capped literals cannot be lifted)");
                problem.capped = false;
            } else if (mode_override.rfind("capped=", 0) == 0) {
                std::int64_t l = std::stoll(mode_override.substr(7));
                // re-parse the generators under the capped mode
                problem.capped = true;
                problem.capped_precision = l;
                ProblemFile reparsed = parse_problem(print_problem(problem));
                problem = std::move(reparsed);
            } else {
                throw DomainError("bad --mode value: " + mode_override);
            }
        }
        if (!degree_bound_override.empty()) {
            if (degree_bound_override == "macaulay") {
                problem.degree_bound_is_macaulay = true;
            } else {
                problem.degree_bound_is_macaulay = false;
                problem.degree_bound = std::stoll(degree_bound_override);
            }
        }

        RunSettings settings;
        settings.algorithm = algorithm == "naive" ? Algorithm::Naive
                                                  : Algorithm::SignatureBased;
        settings.driver.carry = carry == "raw" ? Carry::Raw : Carry::Reduced;
        settings.driver.pivot_pool = pivot_pool == "full-macaulay"
                                         ? PivotPool::FullMacaulay
                                         : PivotPool::F5;
        settings.analyze_precision = analyze_precision;
        settings.oracle_check = oracle_check;
        if (settings.algorithm == Algorithm::SignatureBased &&
            (settings.driver.carry != Carry::Reduced ||
             settings.driver.pivot_pool != PivotPool::F5))
            throw DomainError("--carry/--pivot-pool apply to the naive algorithm only");

        std::int64_t D = problem.resolved_degree_bound();
        GroebnerReport report =
            settings.algorithm == Algorithm::Naive
                ? tropical_mf5(problem.gens, D, problem.order, settings.driver)
                : tropical_mf5_sig(problem.gens, D, problem.order);

        nlohmann::json doc = report_to_json(report, problem, settings);
        std::cout << report_to_text(report, problem, settings);

        if (analyze_precision) {
            if (problem.capped)
                throw DomainError("--analyze-precision requires exact mode");
            PrecisionLedger ledger = sufficient_precision(problem.gens, D, problem.order);
            attach_ledger(doc, ledger);
            std::cout << "precision ledger: sufficient input precision "
                      << ledger.prec_bound << ", loss bound " << ledger.loss_bound
                      << "\n";
            for (const auto& c : ledger.cells)
                std::cout << "  d=" << c.d << " i=" << c.i << ": delta=" << c.delta
                          << (c.delta_from_minors ? "" : " (bounded-by-pivots-only)")
                          << " observed=" << c.observed_loss << " spread=" << c.spread
                          << " box=" << c.box << "\n";
        }

        if (oracle_check) {
            if (problem.capped)
                throw DomainError("--oracle requires exact mode");
            FullMacaulayResult oracle = full_macaulay_dgb(problem.gens, D, problem.order);
            bool agrees = report.status.ok();
            for (std::int64_t d = 1; agrees && d <= D; ++d) {
                auto it = report.per_degree_lms.find(d);
                agrees = it != report.per_degree_lms.end() &&
                         it->second == oracle.per_degree_lms.at(d);
            }
            attach_oracle_agreement(doc, agrees);
            std::cout << "oracle agreement: " << (agrees ? "true" : "false") << "\n";
            if (!agrees) {
                if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
                std::cerr << "error: driver disagrees with the ground truth\n";
                return 1;
            }
        }

        if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
        if (!report.status.ok()) return kExitPrecisionExhausted;
        return 0;
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecisionExhausted;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
