#include <doctest.h>

#include "tropgb/experiment.hpp"

using namespace tropgb;

TEST_CASE("experiment config parsing") {
    ExperimentConfig c = parse_experiment_config(
        "degrees 2 2 3\np 7\nw 1 -3 2\ntiebreak grevlex\ntrials 4\n"
        "precision 30\nseed 99\n");
    CHECK(c.degrees == std::vector<std::int64_t>{2, 2, 3});
    CHECK(c.prime == 7);
    CHECK(c.weight == std::vector<std::int64_t>{1, -3, 2});
    CHECK(c.trials == 4);
    CHECK(c.precision == 30);
    CHECK(c.seed == 99);
    CHECK(c.resolved_degree_bound() == 5);
    CHECK_THROWS_AS(parse_experiment_config("p 2\n"), ParseError);
}

TEST_CASE("haar sampling is deterministic and integral") {
    Rng a(Rng::derive(7, 3)), b(Rng::derive(7, 3));
    HomogeneousPoly f = random_haar_poly(a, 2, 2, 5, 10);
    HomogeneousPoly g = random_haar_poly(b, 2, 2, 5, 10);
    CHECK(f == g);
    for (const auto& [m, c] : f.terms()) {
        CHECK(c.prec_abs() == ExtVal(10));
        if (c.distinguishable_from_zero()) CHECK(c.as_capped().val() >= 0);
    }
}

TEST_CASE("experiment runs are reproducible and aggregate correctly") {
    ExperimentConfig c;
    c.degrees = {1, 2};
    c.weight = {0, 0};
    c.prime = 2;
    c.trials = 6;
    c.precision = 12;
    c.seed = 5;
    ExperimentResult r1 = run_experiment(c, 3);
    ExperimentResult r2 = run_experiment(c, 1);
    REQUIRE(r1.trials.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(r1.trials[i].loss == r2.trials[i].loss);
        CHECK(r1.trials[i].failed == r2.trials[i].failed);
    }
    CHECK(experiment_csv(r1) == experiment_csv(r2));
    // aggregates recomputed from the trial list
    std::int64_t max_loss = 0, failures = 0;
    for (const auto& t : r1.trials) {
        if (t.failed)
            ++failures;
        else
            max_loss = std::max(max_loss, t.loss);
    }
    CHECK(r1.max_loss == max_loss);
    CHECK(r1.failures == failures);
    CHECK(experiment_text(r1).find("max loss") != std::string::npos);
}

TEST_CASE("trivial single-trial statistics") {
    ExperimentConfig c;
    c.degrees = {1, 1};
    c.weight = {0, 0};
    c.prime = 3;
    c.trials = 1;
    c.precision = 8;
    c.seed = 1;
    ExperimentResult r = run_experiment(c, 1);
    CHECK(r.trials.size() == 1);
    if (!r.trials[0].failed) CHECK(r.mean_loss == BigRat(r.trials[0].loss));
}
