#include "tropgb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace tropgb {

std::int64_t ExperimentConfig::resolved_degree_bound() const {
    if (!degree_bound_is_macaulay) return degree_bound;
    std::int64_t b = 1;
    for (auto d : degrees) b += d - 1;
    return b;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig c;
    bool saw_degrees = false, saw_w = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "degrees") {
            std::int64_t d;
            c.degrees.clear();
            while (ls >> d) c.degrees.push_back(d);
            if (c.degrees.empty()) throw ParseError("usage: degrees <d1> ...", lineno, 1);
            saw_degrees = true;
        } else if (key == "p") {
            if (!(ls >> c.prime)) throw ParseError("usage: p <prime>", lineno, 1);
        } else if (key == "w") {
            std::int64_t w;
            c.weight.clear();
            while (ls >> w) c.weight.push_back(w);
            saw_w = true;
        } else if (key == "tiebreak") {
            std::string name;
            ls >> name;
            c.tiebreak = tiebreak_from_name(name);
        } else if (key == "trials") {
            if (!(ls >> c.trials) || c.trials < 1)
                throw ParseError("trials must be >= 1", lineno, 1);
        } else if (key == "precision") {
            if (!(ls >> c.precision)) throw ParseError("usage: precision <l>", lineno, 1);
        } else if (key == "seed") {
            if (!(ls >> c.seed)) throw ParseError("usage: seed <n>", lineno, 1);
        } else if (key == "D") {
            std::string v;
            ls >> v;
            if (v == "macaulay") {
                c.degree_bound_is_macaulay = true;
            } else {
                try {
                    c.degree_bound_is_macaulay = false;
                    c.degree_bound = std::stoll(v);
                } catch (const std::exception&) {
                    throw ParseError("bad degree bound '" + v + "'", lineno, 1);
                }
            }
        } else {
            throw ParseError("unknown directive '" + key + "'", lineno, 1);
        }
    }
    if (!saw_degrees) throw ParseError("missing directive: degrees", lineno, 1);
    if (!saw_w) throw ParseError("missing directive: w", lineno, 1);
    return c;
}

HomogeneousPoly random_haar_poly(Rng& rng, std::size_t nvars, std::int64_t degree,
                                 std::int64_t prime, std::int64_t precision) {
    HomogeneousPoly f(nvars, degree);
    for (const Monomial& m : all_monomials(nvars, degree)) {
        BigInt u = 0;
        BigInt pk = 1;
        for (std::int64_t k = 0; k < precision; ++k) {
            u += pk * rng.below(static_cast<std::uint64_t>(prime));
            pk *= prime;
        }
        f.add_term(m, Scalar(CappedScalar::from_rational(BigRat(u), precision, prime)));
    }
    return f;
}

namespace {
TrialResult run_trial(const ExperimentConfig& c, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    std::vector<HomogeneousPoly> gens;
    for (std::int64_t d : c.degrees)
        gens.push_back(random_haar_poly(rng, c.nvars(), d, c.prime, c.precision));
    DriverOptions opts;
    opts.carry = Carry::Raw; // the form the loss accounting is stated for
    GroebnerReport report =
        tropical_mf5(std::move(gens), c.resolved_degree_bound(), c.order(), opts);
    if (!report.status.ok()) return {0, true};
    // loss observed on the output: input precision minus the worst absolute
    // precision across the basis coefficients
    std::int64_t loss = 0;
    if (!report.status.capped_min_precision.is_infinity())
        loss = std::max<std::int64_t>(
            0, c.precision - report.status.capped_min_precision.finite());
    return {loss, false};
}
} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned num_threads) {
    if (config.degrees.empty() || config.weight.empty())
        throw DomainError("experiment config missing degrees or weights");
    ExperimentResult result;
    result.config = config;
    result.trials.resize(static_cast<std::size_t>(config.trials));

    if (num_threads == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        num_threads = hw == 0 ? 1 : hw;
    }
    num_threads = std::min<unsigned>(num_threads,
                                     static_cast<unsigned>(config.trials));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= result.trials.size()) return;
            result.trials[t] = run_trial(config, Rng::derive(config.seed, t));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < num_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::int64_t ok = 0;
    BigInt loss_sum = 0;
    for (const TrialResult& t : result.trials) {
        if (t.failed) {
            ++result.failures;
            continue;
        }
        ++ok;
        loss_sum += t.loss;
        result.max_loss = std::max(result.max_loss, t.loss);
    }
    result.mean_loss = ok == 0 ? BigRat(0) : BigRat(loss_sum, BigInt(ok));
    return result;
}

namespace {
std::string rat_str(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string join64(const std::vector<std::int64_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}
} // namespace

std::string experiment_text(const ExperimentResult& r) {
    std::ostringstream out;
    out << "degrees [" << join64(r.config.degrees, ",") << "]  p " << r.config.prime
        << "  w [" << join64(r.config.weight, ",") << "]  tiebreak "
        << tiebreak_name(r.config.tiebreak) << "  D "
        << r.config.resolved_degree_bound() << "  l " << r.config.precision
        << "  trials " << r.config.trials << "  seed " << r.config.seed << "\n";
    out << "max loss " << r.max_loss << " | mean loss " << rat_str(r.mean_loss)
        << " | failures " << r.failures << "\n";
    return out.str();
}

std::string experiment_csv(const ExperimentResult& r) {
    std::ostringstream out;
    out << "degrees,p,w,tiebreak,D,precision,trials,seed,max_loss,mean_loss,failures\n";
    out << '"' << join64(r.config.degrees, " ") << "\"," << r.config.prime << ",\""
        << join64(r.config.weight, " ") << "\"," << tiebreak_name(r.config.tiebreak)
        << "," << r.config.resolved_degree_bound() << "," << r.config.precision << ","
        << r.config.trials << "," << r.config.seed << "," << r.max_loss << ","
        << rat_str(r.mean_loss) << "," << r.failures << "\n";
    return out.str();
}

} // namespace tropgb
