#pragma once

#include <string>
#include <vector>

#include "tropgb/groebner.hpp"
#include "tropgb/rng.hpp"

namespace tropgb {

struct ExperimentConfig {
    std::vector<std::int64_t> degrees;
    std::int64_t prime = 2;
    std::vector<std::int64_t> weight;
    Tiebreak tiebreak = Tiebreak::Grevlex;
    std::int64_t trials = 20;
    std::int64_t precision = 30;
    std::uint64_t seed = 0;
    bool degree_bound_is_macaulay = true;
    std::int64_t degree_bound = -1;

    std::size_t nvars() const { return weight.size(); }
    std::int64_t resolved_degree_bound() const;
    TropicalOrder order() const { return {weight, tiebreak}; }
};

ExperimentConfig parse_experiment_config(const std::string& text);

struct TrialResult {
    std::int64_t loss = 0;
    bool failed = false;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialResult> trials;
    std::int64_t max_loss = 0;
    BigRat mean_loss;
    std::int64_t failures = 0;
};

/// Dense degree-d polynomial whose coefficients are uniform p-adic integers
/// truncated to absolute precision l (uniform residues mod p^l).
HomogeneousPoly random_haar_poly(Rng& rng, std::size_t nvars, std::int64_t degree,
                                 std::int64_t prime, std::int64_t precision);

/// Runs the configured number of trials (in parallel workers with per-trial
/// seeds derived from the master seed) and aggregates max/mean loss and the
/// failure count. Loss of a trial is the largest per-reduction pivot loss of
/// the capped raw-carry run; failed trials are excluded from loss stats.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                unsigned num_threads = 0);

std::string experiment_text(const ExperimentResult& r);
std::string experiment_csv(const ExperimentResult& r);

} // namespace tropgb
