#include <doctest.h>

#include "tropgb/problem.hpp"
#include "tropgb/report_json.hpp"

using namespace tropgb;

namespace {
const char* kExample =
    "# running example, homogenized\n"
    "p 2\n"
    "vars x y z\n"
    "w 1 2 3\n"
    "tiebreak grevlex\n"
    "D 4\n"
    "mode exact\n"
    "gen x^4 + x^2*y^2 + 2*y^4 + 1/256*z^4\n";
}

TEST_CASE("problem files parse and round-trip") {
    ProblemFile p = parse_problem(kExample);
    CHECK(p.prime == 2);
    CHECK(p.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(p.order.weight == std::vector<std::int64_t>{1, 2, 3});
    CHECK(p.order.tiebreak == Tiebreak::Grevlex);
    CHECK(p.degree_bound == 4);
    CHECK_FALSE(p.capped);
    REQUIRE(p.gens.size() == 1);
    CHECK(p.gens[0].degree() == 4);
    CHECK(leading_monomial(p.gens[0], p.order) == Monomial({4, 0, 0}));

    ProblemFile q = parse_problem(print_problem(p));
    CHECK(q.prime == p.prime);
    CHECK(q.vars == p.vars);
    CHECK(q.order.weight == p.order.weight);
    CHECK(q.gens == p.gens);
    CHECK(print_problem(q) == print_problem(p));
}

TEST_CASE("parse errors carry positions and reasons") {
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\n"), ParseError); // no gens
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y z\nw 0 0\nD 2\ngen x"), ParseError);
    CHECK_THROWS_AS(parse_problem("p 4\nvars x\nw 0\nD 2\ngen x"), ParseError);
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\nD 2\ngen x + y^2"),
                    ParseError); // non-homogeneous
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\nD 2\ngen x + q"),
                    ParseError); // unknown variable
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\nD 2\ngen x - x"),
                    ParseError); // zero generator
    // capped literal in exact mode
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\nD 2\ngen (1 + O(2^5))*x"),
                    ParseError);
    // missing D with s != n
    CHECK_THROWS_AS(parse_problem("p 2\nvars x y\nw 0 0\ngen x"), ParseError);
}

TEST_CASE("scalar literals") {
    CHECK(parse_scalar_literal("3/4", 2, -1) == Scalar::exact(BigRat(3, 4), 2));
    CHECK(parse_scalar_literal("-17", 5, -1) == Scalar::exact_int(-17, 5));
    Scalar c = parse_scalar_literal("4 + O(7^10)", 7, 20);
    CHECK(c.as_capped().val() == 0);
    CHECK(c.prec_abs() == ExtVal(10));
    Scalar u = parse_scalar_literal("O( 2 ^ 5 )", 2, 30);
    CHECK(u.is_unknown_zero());
    CHECK_THROWS_AS(parse_scalar_literal("1 + O(3^5)", 2, 30), ParseError);
    CHECK_THROWS_AS(parse_scalar_literal("1 +", 2, 30), ParseError);
    CHECK_THROWS_AS(parse_scalar_literal("1/0", 2, 30), ParseError);
}

TEST_CASE("capped mode truncates plain literals and keeps explicit ones") {
    ProblemFile p = parse_problem(
        "p 7\nvars x y z\nw 0 0 0\nD 3\nmode capped 12\n"
        "gen 3*x^2*y - 1/7*z^3 + (4 + O(7^10))*x*y*z\n");
    REQUIRE(p.gens.size() == 1);
    const HomogeneousPoly& f = p.gens[0];
    auto c1 = f.coeff(Monomial({2, 1, 0}));
    REQUIRE(c1);
    CHECK(c1->prec_abs() == ExtVal(12));
    auto c2 = f.coeff(Monomial({0, 0, 3}));
    REQUIRE(c2);
    CHECK(c2->as_capped().val() == -1);
    auto c3 = f.coeff(Monomial({1, 1, 1}));
    REQUIRE(c3);
    CHECK(c3->prec_abs() == ExtVal(10));
    // round-trip through the canonical printer
    ProblemFile q = parse_problem(print_problem(p));
    CHECK(q.gens == p.gens);
}

TEST_CASE("default degree bound is the Macaulay bound when s == n") {
    ProblemFile p = parse_problem("p 2\nvars x y\nw 0 0\ngen x^2\ngen y^3\n");
    CHECK(p.degree_bound_is_macaulay);
    CHECK(p.resolved_degree_bound() == 4);
}

TEST_CASE("malformed input never escapes the error hierarchy") {
    // mutation fuzz over a valid file: every failure must surface as a
    // library error, never a crash or a foreign exception
    std::string base =
        "p 7\nvars x y\nw 1 -2\ntiebreak lex\nD 3\nmode capped 9\n"
        "gen 3*x^2 - (1/7 + O(7^4))*x*y + y^2\ngen x*y\n";
    const char junk[] = "()+-*/^O#pqz079 \n";
    std::uint64_t state = 99;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    int parsed = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s = base;
        for (int edits = 0; edits < 1 + static_cast<int>(next() % 4); ++edits) {
            std::size_t pos = next() % s.size();
            char c = junk[next() % (sizeof(junk) - 1)];
            switch (next() % 3) {
            case 0: s[pos] = c; break;
            case 1: s.insert(pos, 1, c); break;
            default: s.erase(pos, 1); break;
            }
        }
        try {
            ProblemFile p = parse_problem(s);
            ++parsed;
            (void)print_problem(p);
        } catch (const Error&) {
            // expected for most mutations; anything else escapes and fails
        }
    }
    CHECK(parsed >= 0);
}

TEST_CASE("json report carries exact strings and schema version") {
    ProblemFile p = parse_problem("p 2\nvars x y\nw 0 0\nD 2\ngen x\ngen y\n");
    GroebnerReport rep = tropical_mf5(p.gens, 2, p.order);
    RunSettings settings;
    nlohmann::json doc = report_to_json(rep, p, settings);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["status"]["kind"] == "exact");
    CHECK(doc["lm_minimal"].size() == 2);
    for (const auto& b : doc["basis"]) CHECK(b["leading_coefficient"].is_string());
    std::string text = report_to_text(rep, p, settings);
    CHECK(text.find("minimal leading monomials") != std::string::npos);
}
