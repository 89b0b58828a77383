#include <doctest.h>

#include <algorithm>

#include "tropgb/poly.hpp"
#include "tropgb/precision.hpp"
#include "tropgb/rng.hpp"

using namespace tropgb;

namespace {

Monomial M(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }

Term term(long long num, long long den, std::vector<std::int32_t> e, std::int64_t p) {
    return {Scalar::exact(BigRat(num, den), p), M(std::move(e))};
}

Scalar random_exact(Rng& rng, std::int64_t p) {
    std::int64_t u;
    do {
        u = rng.range(-30, 30);
    } while (u == 0 || u % p == 0);
    std::int64_t e = rng.range(-3, 3);
    BigRat v(u);
    if (e >= 0)
        v *= BigRat(pow_int(p, e));
    else
        v /= BigRat(pow_int(p, -e));
    return Scalar::exact(v, p);
}

Monomial random_monomial(Rng& rng, std::size_t n, std::int64_t d) {
    std::vector<std::int32_t> e(n, 0);
    for (std::int64_t k = 0; k < d; ++k) e[rng.below(n)] += 1;
    return Monomial(e);
}

int rank_of(TermCmp c) {
    // linear rank for transitivity checks: Greater means the first argument
    // is the larger term
    switch (c) {
    case TermCmp::Greater: return 1;
    case TermCmp::Less: return -1;
    default: return 0;
    }
}

} // namespace

TEST_CASE("term values against hand evaluation") {
    TropicalOrder ord{{1, 2, 3}, Tiebreak::Grevlex};
    // 2^-8 * z^4 at w=(1,2,3): -8 + 12 = 4
    Term t{Scalar::exact(BigRat(1, 256), 2), M({0, 0, 4})};
    CHECK(term_value(t, ord).value == ExtVal(4));

    TropicalOrder zero{{0, 0, 0}, Tiebreak::Grevlex};
    Term u = term(24, 1, {1, 1, 0}, 2);
    CHECK(term_value(u, zero).value == u.coeff.valuation().value);

    // p=7, w=(1,4,1,-1): 49*x1*x4^2 -> 2 + 1 - 2 = 1
    TropicalOrder w4{{1, 4, 1, -1}, Tiebreak::Grevlex};
    Term v{Scalar::exact_int(49, 7), M({1, 0, 0, 2})};
    CHECK(term_value(v, w4).value == ExtVal(1));
}

TEST_CASE("term comparison: equal values broken by grevlex") {
    TropicalOrder ord{{1, 2, 3}, Tiebreak::Grevlex};
    Term a = term(1, 1, {4, 0, 0}, 2); // x^4, value 4
    Term b = term(1, 1, {2, 1, 0}, 2); // x^2 y, value 4
    CHECK(compare_terms(a, b, ord) == TermCmp::Greater);
    CHECK(compare_terms(b, a, ord) == TermCmp::Less);
    CHECK(compare_terms(a, a, ord) == TermCmp::Identical);

    Term c = term(3, 1, {4, 0, 0}, 2); // same monomial, same value, different coeff
    CHECK(compare_terms(a, c, ord) == TermCmp::EqualRank);
}

TEST_CASE("incomparable at insufficient precision") {
    // w=(0,4), lex: O(2^2) X1 vs X2
    TropicalOrder ord{{0, 4}, Tiebreak::Lex};
    Term a{Scalar(CappedScalar::unknown_zero(2, 2)), M({1, 0})};
    Term b{Scalar(CappedScalar::from_unit(1, 0, 30, 2)), M({0, 1})};
    CHECK_THROWS_AS(compare_terms(a, b, ord), PrecisionError);
    // with enough precision on the O() side the comparison resolves
    Term a2{Scalar(CappedScalar::unknown_zero(2, 5)), M({1, 0})};
    CHECK(compare_terms(a2, b, ord) == TermCmp::Less);
}

TEST_CASE("greatest term of the running example") {
    // terms of x^4 + x^2 y + 2 y^4 + 2^-8 z^4, w=(1,2,3), grevlex (the
    // polynomial itself is not homogeneous, so compare at the term level)
    TropicalOrder ord{{1, 2, 3}, Tiebreak::Grevlex};
    std::vector<Term> terms = {{Scalar::exact_int(1, 2), M({4, 0, 0})},
                               {Scalar::exact_int(1, 2), M({2, 1, 0})},
                               {Scalar::exact_int(2, 2), M({0, 4, 0})},
                               {Scalar::exact(BigRat(1, 256), 2), M({0, 0, 4})}};

    // derived oracle: enumerate the four term values independently
    std::vector<std::int64_t> values;
    for (const Term& t : terms)
        values.push_back(t.coeff.valuation().value.finite() + ord.weight_dot(t.mon));
    CHECK(values == std::vector<std::int64_t>{4, 4, 9, 4});

    const Term* best = &terms[0];
    for (const Term& t : terms)
        if (compare_terms(t, *best, ord) == TermCmp::Greater) best = &t;
    CHECK(best->mon == M({4, 0, 0}));
    for (const Term& t : terms)
        if (&t != best) CHECK(compare_terms(*best, t, ord) == TermCmp::Greater);
}

TEST_CASE("leading term extraction on homogeneous polynomials") {
    TropicalOrder ord{{1, 2, 3}, Tiebreak::Grevlex};
    // homogeneous cousin of the running example
    HomogeneousPoly f(3, 4);
    f.add_term(M({4, 0, 0}), Scalar::exact_int(1, 2));
    f.add_term(M({2, 2, 0}), Scalar::exact_int(1, 2));
    f.add_term(M({0, 4, 0}), Scalar::exact_int(2, 2));
    f.add_term(M({0, 0, 4}), Scalar::exact(BigRat(1, 256), 2));
    // values: 4, 6, 9, 4; grevlex prefers x^4 over z^4
    CHECK(leading_monomial(f, ord) == M({4, 0, 0}));

    HomogeneousPoly single(3, 2);
    single.add_term(M({1, 1, 0}), Scalar::exact_int(5, 2));
    CHECK(leading_term(single, ord).mon == M({1, 1, 0}));

    // w = 0, unit coefficients: classical grevlex leading monomial
    TropicalOrder w0{{0, 0, 0}, Tiebreak::Grevlex};
    HomogeneousPoly g(3, 2);
    g.add_term(M({1, 0, 1}), Scalar::exact_int(1, 2));
    g.add_term(M({0, 2, 0}), Scalar::exact_int(1, 2));
    g.add_term(M({1, 1, 0}), Scalar::exact_int(1, 2));
    CHECK(leading_monomial(g, w0) == M({1, 1, 0})); // x*y beats y^2 and x*z
    CHECK_THROWS_AS(leading_term(HomogeneousPoly(3, 2), w0), DomainError);
}

TEST_CASE("multiply by monomial preserves coefficients and degree") {
    TropicalOrder ord{{0, 0}, Tiebreak::Grevlex};
    HomogeneousPoly f(2, 1);
    f.add_term(M({1, 0}), Scalar::exact_int(1, 2));
    f.add_term(M({0, 1}), Scalar::exact_int(1, 2));
    HomogeneousPoly fx = f.multiply_by_monomial(M({1, 0}));
    CHECK(fx.degree() == 2);
    CHECK(fx.coeff(M({2, 0})).has_value());
    CHECK(fx.coeff(M({1, 1})).has_value());
    CHECK(f.multiply_by_monomial(M({0, 0})) == f);
}

TEST_CASE("LT(m*f) = m*LT(f) on random polynomials") {
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng.below(2);
        std::int64_t p = trial % 2 ? 2 : 7;
        TropicalOrder ord;
        for (std::size_t i = 0; i < n; ++i) ord.weight.push_back(rng.range(-3, 3));
        ord.tiebreak = trial % 3 ? Tiebreak::Grevlex : Tiebreak::Lex;
        std::int64_t d = 1 + rng.below(3);
        HomogeneousPoly f(n, d);
        for (const Monomial& m : all_monomials(n, d))
            if (rng.below(2)) f.add_term(m, random_exact(rng, p));
        if (f.is_zero()) continue;
        Monomial m = random_monomial(rng, n, 1 + rng.below(3));
        CHECK(leading_monomial(f.multiply_by_monomial(m), ord) ==
              leading_monomial(f, ord) * m);
    }
}

TEST_CASE("monomial enumeration count and order") {
    TropicalOrder w0_lex{{0, 0}, Tiebreak::Lex};
    CHECK(enumerate_monomials(3, 2, TropicalOrder{{0, 0, 0}, Tiebreak::Grevlex}).size() == 6);

    auto lex3 = enumerate_monomials(2, 3, w0_lex);
    REQUIRE(lex3.size() == 4);
    CHECK(lex3[0] == M({3, 0}));
    CHECK(lex3[1] == M({2, 1}));
    CHECK(lex3[2] == M({1, 2}));
    CHECK(lex3[3] == M({0, 3}));

    // w=(0,-1), lex: derived by sorting the values by hand
    TropicalOrder wneg{{0, -1}, Tiebreak::Lex};
    auto ms = enumerate_monomials(2, 2, wneg);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == M({0, 2})); // value -2
    CHECK(ms[1] == M({1, 1})); // value -1
    CHECK(ms[2] == M({2, 0})); // value 0
}

TEST_CASE("comparison totality and transitivity on random triples") {
    Rng rng(988);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t n = 2 + rng.below(2);
        std::int64_t p = trial % 2 ? 2 : 5;
        TropicalOrder ord;
        for (std::size_t i = 0; i < n; ++i) ord.weight.push_back(rng.range(-2, 2));
        ord.tiebreak = trial % 2 ? Tiebreak::Grevlex : Tiebreak::Lex;
        std::int64_t d = 1 + rng.below(3);
        Term a{random_exact(rng, p), random_monomial(rng, n, d)};
        Term b{random_exact(rng, p), random_monomial(rng, n, d)};
        Term c{random_exact(rng, p), random_monomial(rng, n, d)};

        TermCmp ab = compare_terms(a, b, ord);
        TermCmp ba = compare_terms(b, a, ord);
        CHECK(rank_of(ab) == -rank_of(ba)); // antisymmetry
        // transitivity of strict order
        if (compare_terms(a, b, ord) == TermCmp::Greater &&
            compare_terms(b, c, ord) == TermCmp::Greater)
            CHECK(compare_terms(a, c, ord) == TermCmp::Greater);

        // multiplicativity under a common term factor
        Term f{random_exact(rng, p), random_monomial(rng, n, 1 + rng.below(2))};
        Term af{a.coeff * f.coeff, a.mon * f.mon};
        Term bf{b.coeff * f.coeff, b.mon * f.mon};
        CHECK(rank_of(compare_terms(af, bf, ord)) == rank_of(ab));
    }
}

TEST_CASE("sums of dominated terms stay dominated") {
    Rng rng(31337);
    int done = 0;
    while (done < 10000) {
        std::size_t n = 2;
        std::int64_t p = done % 2 ? 2 : 7;
        TropicalOrder ord{{rng.range(-3, 3), rng.range(-3, 3)},
                          done % 2 ? Tiebreak::Grevlex : Tiebreak::Lex};
        std::int64_t d = 1 + rng.below(3);
        Term a{random_exact(rng, p), random_monomial(rng, n, d)};
        Monomial beta = random_monomial(rng, n, d);
        Scalar b1 = random_exact(rng, p), b2 = random_exact(rng, p);
        Scalar sum = b1 + b2;
        if (sum.is_structural_zero()) continue;
        Term t1{b1, beta}, t2{b2, beta};
        if (compare_terms(a, t1, ord) != TermCmp::Greater ||
            compare_terms(a, t2, ord) != TermCmp::Greater)
            continue;
        CHECK(compare_terms(a, Term{sum, beta}, ord) == TermCmp::Greater);
        ++done;
    }
}

TEST_CASE("truncation above the leading-term bound preserves the leading monomial") {
    Rng rng(2718);
    int done = 0;
    while (done < 10000) {
        std::size_t n = 2 + rng.below(2);
        std::int64_t p = done % 2 ? 2 : 5;
        TropicalOrder ord;
        for (std::size_t i = 0; i < n; ++i) ord.weight.push_back(rng.range(-3, 3));
        ord.tiebreak = done % 2 ? Tiebreak::Grevlex : Tiebreak::Lex;
        std::int64_t d = 1 + rng.below(2);
        HomogeneousPoly f(n, d);
        for (const Monomial& m : all_monomials(n, d))
            if (rng.below(3)) f.add_term(m, random_exact(rng, p));
        if (f.is_zero()) continue;

        std::int64_t bound = lt_precision_bound(f, ord);
        // truncate every coefficient, absent ones becoming O(p^(bound+1))
        HomogeneousPoly g(n, d);
        for (const Monomial& m : all_monomials(n, d)) {
            auto c = f.coeff(m);
            g.add_term(m, c ? c->truncate(bound + 1)
                            : Scalar(CappedScalar::unknown_zero(p, bound + 1)));
        }
        CHECK(leading_monomial(g, ord) == leading_monomial(f, ord));
        ++done;
    }
}
