#include "tropgb/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "tropgb/groebner.hpp"

namespace tropgb {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr std::int64_t kMaxExponent = 1000000;

std::int64_t to_int64(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size())
            throw ParseError(std::string("bad ") + what + ": '" + s + "'", line, 1);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + s + "'", line, 1);
    }
}

// --- expression tokenizer ----------------------------------------------

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, std::size_t line) : src_(src), line_(line) {
        advance();
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        tok_ = {Token::Kind::End, "", line_, pos_ + 1};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_ = {Token::Kind::Number, src_.substr(start, pos_ - start), line_,
                    start + 1};
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start), line_,
                    start + 1};
        } else {
            tok_ = {Token::Kind::Symbol, std::string(1, c), line_, pos_ + 1};
            ++pos_;
        }
    }

    const std::string& src_;
    std::size_t line_;
    std::size_t pos_ = 0;
    Token tok_;
};

std::int64_t parse_int_token(Lexer& lx, const char* what) {
    bool neg = false;
    if (lx.peek().kind == Token::Kind::Symbol &&
        (lx.peek().text == "-" || lx.peek().text == "+")) {
        neg = lx.take().text == "-";
    }
    if (lx.peek().kind != Token::Kind::Number)
        lx.fail(std::string("expected ") + what);
    Token t = lx.take();
    std::int64_t v = to_int64(t.text, t.line, what);
    return neg ? -v : v;
}

struct ScalarParser {
    std::int64_t prime;
    std::int64_t capped_precision; // < 0: exact mode

    // rational := int [ '/' uint ]
    BigRat rational(Lexer& lx) const {
        std::int64_t num_sign = 1;
        if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "-") {
            lx.take();
            num_sign = -1;
        }
        if (lx.peek().kind != Token::Kind::Number) lx.fail("expected a number");
        BigInt num(lx.take().text);
        num *= num_sign;
        if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "/") {
            lx.take();
            if (lx.peek().kind != Token::Kind::Number) lx.fail("expected a denominator");
            BigInt den(lx.take().text);
            if (den == 0) lx.fail("zero denominator");
            return BigRat(num, den);
        }
        return BigRat(num);
    }

    // O '(' uint '^' int ')'
    std::int64_t big_o(Lexer& lx) const {
        lx.take(); // 'O'
        if (!(lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "("))
            lx.fail("expected '(' after O");
        lx.take();
        std::int64_t base = parse_int_token(lx, "the prime in O(p^m)");
        if (base != prime)
            lx.fail("capped literal uses prime " + std::to_string(base) +
                    " but the problem prime is " + std::to_string(prime));
        if (!(lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "^"))
            lx.fail("expected '^' in O(p^m)");
        lx.take();
        std::int64_t m = parse_int_token(lx, "the exponent in O(p^m)");
        if (m > kMaxExponent || m < -kMaxExponent)
            lx.fail("precision exponent out of range");
        if (!(lx.peek().kind == Token::Kind::Symbol && lx.peek().text == ")"))
            lx.fail("expected ')' closing O(p^m)");
        lx.take();
        return m;
    }

    bool at_big_o(Lexer& lx) const {
        return lx.peek().kind == Token::Kind::Ident && lx.peek().text == "O";
    }

    // scalar := rational [ '+' O(p^m) ] | O(p^m)
    Scalar scalar(Lexer& lx) const {
        if (at_big_o(lx)) {
            std::int64_t m = big_o(lx);
            require_capped(lx);
            return Scalar(CappedScalar::unknown_zero(prime, m));
        }
        BigRat r = rational(lx);
        if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "+") {
            // lookahead for O(...): only consume '+' if a capped tail follows
            Lexer probe = lx;
            probe.take();
            if (at_big_o(probe)) {
                lx.take();
                std::int64_t m = big_o(lx);
                require_capped(lx);
                return Scalar(CappedScalar::from_rational(r, m, prime));
            }
        }
        if (capped_precision >= 0)
            return Scalar(CappedScalar::from_rational(r, capped_precision, prime));
        return Scalar::exact(std::move(r), prime);
    }

    void require_capped(Lexer& lx) const {
        if (capped_precision < 0)
            lx.fail("capped literal in exact mode");
    }
};

} // namespace

Scalar parse_scalar_literal(const std::string& text, std::int64_t prime,
                            std::int64_t capped_precision) {
    Lexer lx(text, 1);
    ScalarParser sp{prime, capped_precision};
    Scalar s = sp.scalar(lx);
    if (lx.peek().kind != Token::Kind::End)
        lx.fail("trailing input after scalar literal");
    return s;
}

namespace {

struct PolyParser {
    const std::vector<std::string>& vars;
    ScalarParser sp;
    std::size_t line;

    int var_index(Lexer& lx, const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        lx.fail("unknown variable '" + name + "'");
    }

    // factor := '(' scalar ')' | rational | O(...) | var ['^' uint]
    // returns either a scalar factor or a variable power
    void factor(Lexer& lx, Scalar& coeff, std::vector<std::int32_t>& expo) const {
        const Token& t = lx.peek();
        if (t.kind == Token::Kind::Symbol && t.text == "(") {
            lx.take();
            Scalar s = sp.scalar(lx);
            if (!(lx.peek().kind == Token::Kind::Symbol && lx.peek().text == ")"))
                lx.fail("expected ')'");
            lx.take();
            coeff = coeff * s;
            return;
        }
        if (t.kind == Token::Kind::Number) {
            coeff = coeff * sp.scalar(lx);
            return;
        }
        if (t.kind == Token::Kind::Ident) {
            if (sp.at_big_o(lx)) {
                coeff = coeff * sp.scalar(lx);
                return;
            }
            std::string name = lx.take().text;
            int vi = var_index(lx, name);
            std::int64_t e = 1;
            if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "^") {
                lx.take();
                if (lx.peek().kind != Token::Kind::Number) lx.fail("expected exponent");
                Token t = lx.take();
                e = to_int64(t.text, t.line, "exponent");
            }
            if (e < 0 || e > kMaxExponent || expo[vi] > kMaxExponent - e)
                lx.fail("exponent out of range");
            expo[vi] += static_cast<std::int32_t>(e);
            return;
        }
        lx.fail("expected a coefficient or variable");
    }

    HomogeneousPoly parse(Lexer& lx) const {
        std::vector<Term> terms;
        bool first = true;
        while (lx.peek().kind != Token::Kind::End) {
            bool negative = false;
            if (lx.peek().kind == Token::Kind::Symbol &&
                (lx.peek().text == "+" || lx.peek().text == "-")) {
                negative = lx.take().text == "-";
            } else if (!first) {
                lx.fail("expected '+' or '-' between terms");
            }
            Scalar coeff = sp.capped_precision >= 0
                               ? Scalar(CappedScalar::from_rational(
                                     BigRat(1), sp.capped_precision, sp.prime))
                               : Scalar::exact_int(1, sp.prime);
            std::vector<std::int32_t> expo(vars.size(), 0);
            factor(lx, coeff, expo);
            while (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "*") {
                lx.take();
                factor(lx, coeff, expo);
            }
            if (negative) coeff = coeff.negate();
            terms.push_back({coeff, Monomial(expo)});
            first = false;
        }
        if (terms.empty())
            throw ParseError("empty polynomial", line, 1);
        std::int64_t deg = terms.front().mon.degree();
        for (const Term& t : terms)
            if (t.mon.degree() != deg)
                throw ParseError("non-homogeneous polynomial: degree " +
                                     std::to_string(t.mon.degree()) + " term in a degree-" +
                                     std::to_string(deg) + " polynomial",
                                 line, 1);
        HomogeneousPoly f(vars.size(), deg);
        for (const Term& t : terms) f.add_term(t.mon, t.coeff);
        return f;
    }
};

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

HomogeneousPoly parse_polynomial(const std::string& text,
                                 const std::vector<std::string>& vars,
                                 std::int64_t prime, std::int64_t capped_precision) {
    Lexer lx(text, 1);
    PolyParser pp{vars, {prime, capped_precision}, 1};
    return pp.parse(lx);
}

std::int64_t ProblemFile::resolved_degree_bound() const {
    if (degree_bound_is_macaulay) return macaulay_bound(gens);
    return degree_bound;
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile p;
    bool saw_p = false, saw_vars = false, saw_w = false, saw_tiebreak = false,
         saw_d = false, saw_mode = false;
    std::vector<std::pair<std::size_t, std::string>> gen_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::vector<std::string> words = split_words(line);
        if (words.empty()) continue;
        const std::string& key = words[0];

        if (key == "p") {
            if (words.size() != 2) throw ParseError("usage: p <prime>", lineno, 1);
            p.prime = to_int64(words[1], lineno, "prime");
            if (!is_prime(p.prime))
                throw ParseError(words[1] + " is not prime", lineno, 1);
            saw_p = true;
        } else if (key == "vars") {
            if (words.size() < 2) throw ParseError("usage: vars <names...>", lineno, 1);
            p.vars.assign(words.begin() + 1, words.end());
            for (const auto& v : p.vars) {
                if (v == "O" || std::count(p.vars.begin(), p.vars.end(), v) > 1)
                    throw ParseError("bad variable name '" + v + "'", lineno, 1);
            }
            saw_vars = true;
        } else if (key == "w") {
            for (std::size_t k = 1; k < words.size(); ++k)
                p.order.weight.push_back(to_int64(words[k], lineno, "weight"));
            saw_w = true;
        } else if (key == "tiebreak") {
            if (words.size() != 2) throw ParseError("usage: tiebreak grevlex|lex", lineno, 1);
            try {
                p.order.tiebreak = tiebreak_from_name(words[1]);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), lineno, 1);
            }
            saw_tiebreak = true;
        } else if (key == "D") {
            if (words.size() != 2) throw ParseError("usage: D <bound>|macaulay", lineno, 1);
            if (words[1] == "macaulay") {
                p.degree_bound_is_macaulay = true;
            } else {
                p.degree_bound = to_int64(words[1], lineno, "degree bound");
                if (p.degree_bound < 0 || p.degree_bound > kMaxExponent)
                    throw ParseError("degree bound out of range", lineno, 1);
            }
            saw_d = true;
        } else if (key == "mode") {
            if (words.size() >= 2 && words[1] == "exact" && words.size() == 2) {
                p.capped = false;
            } else if (words.size() == 3 && words[1] == "capped") {
                p.capped = true;
                p.capped_precision = to_int64(words[2], lineno, "precision");
                if (p.capped_precision > kMaxExponent ||
                    p.capped_precision < -kMaxExponent)
                    throw ParseError("precision out of range", lineno, 1);
            } else {
                throw ParseError("usage: mode exact | mode capped <precision>", lineno, 1);
            }
            saw_mode = true;
        } else if (key == "gen") {
            std::string rest = line.substr(line.find("gen") + 3);
            gen_lines.emplace_back(lineno, rest);
        } else {
            throw ParseError("unknown directive '" + key + "'", lineno, 1);
        }
    }

    if (!saw_p) throw ParseError("missing directive: p", lineno, 1);
    if (!saw_vars) throw ParseError("missing directive: vars", lineno, 1);
    if (!saw_w) throw ParseError("missing directive: w", lineno, 1);
    (void)saw_tiebreak; // defaults to grevlex
    (void)saw_mode;     // defaults to exact
    if (p.order.weight.size() != p.vars.size())
        throw ParseError("weight vector length " + std::to_string(p.order.weight.size()) +
                             " does not match " + std::to_string(p.vars.size()) +
                             " variables",
                         1, 1);
    if (gen_lines.empty()) throw ParseError("empty generator list", lineno, 1);

    std::int64_t cp = p.capped ? p.capped_precision : -1;
    for (const auto& [ln, src] : gen_lines) {
        Lexer lx(src, ln);
        PolyParser pp{p.vars, {p.prime, cp}, ln};
        HomogeneousPoly f = pp.parse(lx);
        if (f.is_zero()) throw ParseError("zero generator", ln, 1);
        p.gens.push_back(std::move(f));
    }

    if (!saw_d) {
        if (p.gens.size() == p.vars.size())
            p.degree_bound_is_macaulay = true;
        else
            throw ParseError(
                "missing directive: D (required unless #generators == #variables)",
                lineno, 1);
    }
    return p;
}

std::string print_scalar(const Scalar& s) {
    if (s.is_exact()) return s.str();
    const CappedScalar& c = s.as_capped();
    if (c.is_structural_zero()) return "0";
    return c.str();
}

std::string print_problem(const ProblemFile& p) {
    std::ostringstream out;
    out << "p " << p.prime << "\n";
    out << "vars";
    for (const auto& v : p.vars) out << " " << v;
    out << "\nw";
    for (auto w : p.order.weight) out << " " << w;
    out << "\ntiebreak " << tiebreak_name(p.order.tiebreak) << "\n";
    if (p.degree_bound_is_macaulay)
        out << "D macaulay\n";
    else
        out << "D " << p.degree_bound << "\n";
    if (p.capped)
        out << "mode capped " << p.capped_precision << "\n";
    else
        out << "mode exact\n";
    for (const auto& g : p.gens) {
        out << "gen ";
        std::string body;
        for (const Term& t : g.sorted_terms(p.order)) {
            std::string cs = print_scalar(t.coeff);
            bool compound = cs.find(" + O") != std::string::npos;
            std::string mon = t.mon.str(p.vars);
            std::string piece;
            if (compound) cs = "(" + cs + ")";
            if (mon == "1")
                piece = cs;
            else
                piece = cs + "*" + mon;
            if (body.empty())
                body = piece;
            else
                body += " + " + piece;
        }
        out << body << "\n";
    }
    return out.str();
}

} // namespace tropgb
