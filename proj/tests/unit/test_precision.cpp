#include <doctest.h>

#include <algorithm>

#include "tropgb/oracle.hpp"
#include "tropgb/precision.hpp"
#include "tropgb/rng.hpp"

using namespace tropgb;

namespace {

Monomial M(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }

HomogeneousPoly random_integral(Rng& rng, std::size_t n, std::int64_t d, std::int64_t p) {
    HomogeneousPoly f(n, d);
    for (const Monomial& m : all_monomials(n, d)) {
        std::int64_t u;
        do {
            u = rng.range(1, 40);
        } while (u % p == 0 && rng.below(2)); // bias towards units, keep some p-multiples
        f.add_term(m, Scalar::exact_int(u, p));
    }
    return f;
}

} // namespace

TEST_CASE("leading-term precision bound") {
    // w = 0: bound is the valuation of the leading coefficient
    TropicalOrder w0{{0, 0}, Tiebreak::Grevlex};
    HomogeneousPoly f(2, 2);
    f.add_term(M({2, 0}), Scalar::exact_int(4, 2));
    f.add_term(M({0, 2}), Scalar::exact_int(8, 2));
    CHECK(lt_precision_bound(f, w0) == 2);

    // w = (0,4): f = 4*X1 + X2, LT = 4*X1 (value 2), bound 2 + max(0, -4) = 2
    TropicalOrder ord{{0, 4}, Tiebreak::Lex};
    HomogeneousPoly g(2, 1);
    g.add_term(M({1, 0}), Scalar::exact_int(4, 2));
    g.add_term(M({0, 1}), Scalar::exact_int(1, 2));
    CHECK(leading_monomial(g, ord) == M({1, 0}));
    CHECK(lt_precision_bound(g, ord) == 2);
    // truncation at bound+1 determines the leading term, at the bound it fails
    HomogeneousPoly g3(2, 1), g2(2, 1);
    for (const auto& [m, c] : g.terms()) {
        g3.add_term(m, c.truncate(3));
        g2.add_term(m, c.truncate(2));
    }
    CHECK(leading_monomial(g3, ord) == M({1, 0}));
    CHECK_THROWS_AS(leading_monomial(g2, ord), PrecisionError);

    // single-monomial polynomial at w = 0
    HomogeneousPoly h(2, 3);
    h.add_term(M({2, 1}), Scalar::exact_int(12, 2));
    CHECK(lt_precision_bound(h, w0) == 2);

    // the vertex formula agrees with explicit enumeration of beta
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        TropicalOrder o{{rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3)},
                        Tiebreak::Grevlex};
        std::int64_t d = 1 + rng.below(3);
        HomogeneousPoly q(3, d);
        q.add_term(M({static_cast<std::int32_t>(d), 0, 0}), Scalar::exact_int(3, 2));
        q.add_term(M({0, static_cast<std::int32_t>(d), 0}), Scalar::exact_int(6, 2));
        Term lt = leading_term(q, o);
        std::int64_t expect = lt.coeff.valuation().value.finite();
        std::int64_t best = INT64_MIN;
        for (const Monomial& beta : all_monomials(3, d))
            best = std::max(best, o.weight_dot(lt.mon) - o.weight_dot(beta));
        CHECK(lt_precision_bound(q, o) == expect + best);
    }
}

TEST_CASE("minor valuation oracle on explicit matrices") {
    TropicalOrder ord{{0, 0}, Tiebreak::Grevlex};
    FieldContext ctx{Backend::Exact, 2};

    // identity block: valuation 0
    MacaulayMatrix id(2, 1, ord, ctx);
    HomogeneousPoly r1(2, 1), r2(2, 1);
    r1.add_term(M({1, 0}), Scalar::exact_int(1, 2));
    r2.add_term(M({0, 1}), Scalar::exact_int(1, 2));
    id.append_row(r1, {1, Monomial::one(2)});
    id.append_row(r2, {2, Monomial::one(2)});
    CHECK(minor_valuation_oracle(id, {0, 1}) == ExtVal(0));

    // 1x1 matrix (p^3)
    MacaulayMatrix one(1, 1, TropicalOrder{{0}, Tiebreak::Grevlex}, ctx);
    HomogeneousPoly s(1, 1);
    s.add_term(M({1}), Scalar::exact_int(8, 2));
    one.append_row(s, {1, Monomial::one(1)});
    CHECK(minor_valuation_oracle(one, {0}) == ExtVal(3));

    // [[2,1],[2,3]] over both columns: det 4, valuation 2
    MacaulayMatrix m(2, 1, ord, ctx);
    HomogeneousPoly a(2, 1), b(2, 1);
    a.add_term(M({1, 0}), Scalar::exact_int(2, 2));
    a.add_term(M({0, 1}), Scalar::exact_int(1, 2));
    b.add_term(M({1, 0}), Scalar::exact_int(2, 2));
    b.add_term(M({0, 1}), Scalar::exact_int(3, 2));
    m.append_row(a, {1, Monomial::one(2)});
    m.append_row(b, {2, Monomial::one(2)});
    CHECK(minor_valuation_oracle(m, {0, 1}) == ExtVal(2));

    // more rows than columns: min over row subsets
    MacaulayMatrix tall(1, 1, TropicalOrder{{0}, Tiebreak::Grevlex}, ctx);
    for (long long v : {4, 6, 8}) {
        HomogeneousPoly t(1, 1);
        t.add_term(M({1}), Scalar::exact_int(v, 2));
        tall.append_row(t, {1, Monomial::one(1)});
    }
    CHECK(minor_valuation_oracle(tall, {0}) == ExtVal(1));

    // guard
    MacaulayMatrix big(1, 1, TropicalOrder{{0}, Tiebreak::Grevlex}, ctx);
    for (int i = 0; i < 13; ++i) {
        HomogeneousPoly t(1, 1);
        t.add_term(M({1}), Scalar::exact_int(1, 2));
        big.append_row(t, {1, Monomial::one(1)});
    }
    CHECK_THROWS_AS(minor_valuation_oracle(big, {0}), GuardError);
}

TEST_CASE("ledger: observed loss equals the minor minimum at weight zero") {
    Rng rng(808);
    TropicalOrder ord{{0, 0}, Tiebreak::Grevlex};
    int done = 0;
    while (done < 15) {
        std::int64_t p = 2;
        std::vector<HomogeneousPoly> gens = {random_integral(rng, 2, 2, p),
                                             random_integral(rng, 2, 1 + rng.below(2), p)};
        std::int64_t D = macaulay_bound(gens);
        if (!hilbert_regularity_check(gens, D, ord).regular) continue;
        PrecisionLedger ledger = sufficient_precision(gens, D, ord);
        for (const auto& cell : ledger.cells) {
            if (!cell.delta_from_minors) continue;
            CHECK(cell.observed_loss == cell.delta);
        }
        ++done;
    }
}

TEST_CASE("ledger at trivial valuations: all deltas zero") {
    TropicalOrder ord{{1, -2}, Tiebreak::Grevlex};
    HomogeneousPoly f(2, 1), g(2, 1);
    f.add_term(M({1, 0}), Scalar::exact_int(1, 5));
    f.add_term(M({0, 1}), Scalar::exact_int(1, 5));
    g.add_term(M({0, 1}), Scalar::exact_int(1, 5));
    PrecisionLedger ledger = sufficient_precision({f, g}, 2, ord);
    CHECK(ledger.loss_bound == 0);
    for (const auto& cell : ledger.cells) {
        CHECK(cell.delta == 0);
        CHECK(cell.box == cell.spread);
    }
    CHECK(ledger.prec_bound >= 0);
}

TEST_CASE("capped run at the sufficient precision reproduces the exact run") {
    Rng rng(6161);
    int done = 0;
    while (done < 15) {
        std::int64_t p = done % 2 ? 2 : 7;
        TropicalOrder ord{{rng.range(-2, 2), rng.range(-2, 2)},
                          done % 2 ? Tiebreak::Grevlex : Tiebreak::Lex};
        std::vector<HomogeneousPoly> gens = {random_integral(rng, 2, 1 + rng.below(2), p),
                                             random_integral(rng, 2, 2, p)};
        std::int64_t D = macaulay_bound(gens);
        if (!hilbert_regularity_check(gens, D, ord).regular) continue;
        PrecisionLedger ledger = sufficient_precision(gens, D, ord);
        std::int64_t l = ledger.prec_bound + 5;
        StabilityVerdict v = stability_check(gens, l, ord, D);
        CHECK(v.outcome == StabilityVerdict::Outcome::Pass);
        CHECK(v.lm_match);
        CHECK(v.min_output_precision >= ExtVal(l - ledger.loss_bound));
        ++done;
    }
}

TEST_CASE("stability check flags expected insufficiency") {
    TropicalOrder ord{{0, 0}, Tiebreak::Grevlex};
    HomogeneousPoly f(2, 1), g(2, 1);
    f.add_term(M({1, 0}), Scalar::exact_int(4, 2)); // valuation 2 leading data
    f.add_term(M({0, 1}), Scalar::exact_int(8, 2));
    g.add_term(M({0, 1}), Scalar::exact_int(2, 2));
    PrecisionLedger ledger = sufficient_precision({f, g}, 2, ord);
    StabilityVerdict low = stability_check({f, g}, ledger.prec_bound, ord, 2);
    CHECK(low.outcome == StabilityVerdict::Outcome::InsufficientPrecisionExpected);
    StabilityVerdict hi = stability_check({f, g}, ledger.prec_bound + 5, ord, 2);
    CHECK(hi.outcome == StabilityVerdict::Outcome::Pass);
}

TEST_CASE("insufficient precision is diagnosed, not guessed") {
    // a generator whose leading coefficient needs 3 digits: at l = 2 the
    // truncation cannot even see it
    TropicalOrder ord{{0, 6}, Tiebreak::Lex};
    HomogeneousPoly f(2, 1);
    f.add_term(M({1, 0}), Scalar::exact_int(4, 2));
    f.add_term(M({0, 1}), Scalar::exact_int(3, 2));
    // LT is 4*X1 (value 2 < 6); truncating to precision 2 hides it
    HomogeneousPoly trunc(2, 1);
    for (const auto& [m, c] : f.terms()) trunc.add_term(m, c.truncate(2));
    CHECK_THROWS_AS(leading_monomial(trunc, ord), PrecisionError);
    GroebnerReport rep = tropical_mf5({trunc}, 2, ord);
    CHECK_FALSE(rep.status.ok());
}

TEST_CASE("pivot-product bound against minors on oracle-sized cells") {
    Rng rng(2299);
    int done = 0;
    while (done < 10) {
        std::int64_t p = 2;
        TropicalOrder ord{{rng.range(-2, 2), rng.range(-2, 2)}, Tiebreak::Grevlex};
        std::vector<HomogeneousPoly> gens = {random_integral(rng, 2, 2, p),
                                             random_integral(rng, 2, 2, p)};
        std::int64_t D = 4;
        PrecisionLedger ledger = sufficient_precision(gens, D, ord);
        for (const auto& cell : ledger.cells) {
            if (!cell.delta_from_minors) continue;
            CHECK(cell.observed_loss >= cell.delta);
        }
        ++done;
    }
}

TEST_CASE("monotonicity: more precision never changes leading monomials") {
    Rng rng(505);
    TropicalOrder ord{{1, -1}, Tiebreak::Grevlex};
    std::vector<HomogeneousPoly> gens = {random_integral(rng, 2, 2, 2),
                                         random_integral(rng, 2, 2, 2)};
    std::int64_t D = 3;
    PrecisionLedger ledger = sufficient_precision(gens, D, ord);
    GroebnerReport exact = tropical_mf5(gens, D, ord);
    std::int64_t prev_loss = -1;
    for (std::int64_t l : {ledger.prec_bound + 1, ledger.prec_bound + 5,
                           ledger.prec_bound + 20}) {
        std::vector<HomogeneousPoly> capped;
        for (const auto& g : gens) {
            HomogeneousPoly h(g.nvars(), g.degree());
            for (const auto& [m, c] : g.terms()) h.add_term(m, c.truncate(l));
            capped.push_back(std::move(h));
        }
        DriverOptions raw;
        raw.carry = Carry::Raw;
        GroebnerReport rep = tropical_mf5(capped, D, ord, raw);
        REQUIRE(rep.status.ok());
        CHECK(rep.per_degree_lms == exact.per_degree_lms);
        if (prev_loss >= 0) CHECK(rep.max_step_loss <= prev_loss);
        prev_loss = rep.max_step_loss;
    }
}
