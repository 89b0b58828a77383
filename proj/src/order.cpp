#include "tropgb/order.hpp"

#include <algorithm>

namespace tropgb {

std::int64_t TropicalOrder::weight_dot(const Monomial& m) const {
    if (m.nvars() != weight.size())
        throw DomainError("weight vector / monomial size mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i)
        s += weight[i] * static_cast<std::int64_t>(m[i]);
    return s;
}

int TropicalOrder::classical_cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw DomainError("comparing monomials over different variable counts");
    std::int64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    if (tiebreak == Tiebreak::Lex) {
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: equal degrees; the last variable where they differ decides,
    // the smaller exponent there wins.
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int TropicalOrder::unit_term_cmp(const Monomial& a, const Monomial& b) const {
    std::int64_t va = weight_dot(a), vb = weight_dot(b);
    if (va != vb) return va < vb ? 1 : -1; // smaller value = greater term
    return classical_cmp(a, b);
}

TermValue term_value(const Term& t, const TropicalOrder& order) {
    ValuationInfo v = t.coeff.valuation();
    if (v.value.is_infinity())
        throw DomainError("term value of a zero coefficient");
    return {ExtVal(v.value.finite() + order.weight_dot(t.mon)), v.lower_bound_only};
}

TermCmp compare_terms(const Term& a, const Term& b, const TropicalOrder& order) {
    if (a.mon == b.mon && a.coeff == b.coeff) return TermCmp::Identical;

    TermValue va = term_value(a, order);
    TermValue vb = term_value(b, order);

    if (!va.lower_bound_only && !vb.lower_bound_only) {
        if (va.value != vb.value)
            return va.value < vb.value ? TermCmp::Greater : TermCmp::Less;
        int c = order.classical_cmp(a.mon, b.mon);
        if (c != 0) return c > 0 ? TermCmp::Greater : TermCmp::Less;
        return TermCmp::EqualRank;
    }
    // An O(p^m) x^beta is certainly smaller than a x^alpha iff its value
    // bound m + w.beta strictly exceeds the known value.
    if (va.lower_bound_only != vb.lower_bound_only) {
        const TermValue& known = va.lower_bound_only ? vb : va;
        const TermValue& bound = va.lower_bound_only ? va : vb;
        if (bound.value > known.value)
            return va.lower_bound_only ? TermCmp::Less : TermCmp::Greater;
    }
    throw PrecisionError("terms incomparable at this precision: " +
                         a.coeff.str() + " vs " + b.coeff.str());
}

namespace {
void enumerate_rec(std::size_t var, std::int64_t remaining,
                   std::vector<std::int32_t>& cur, std::vector<Monomial>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = static_cast<std::int32_t>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t e = remaining; e >= 0; --e) {
        cur[var] = static_cast<std::int32_t>(e);
        enumerate_rec(var + 1, remaining - e, cur, out);
    }
}
} // namespace

std::vector<Monomial> all_monomials(std::size_t nvars, std::int64_t degree) {
    if (nvars == 0) throw DomainError("all_monomials: no variables");
    if (degree < 0) throw DomainError("all_monomials: negative degree");
    std::vector<Monomial> out;
    std::vector<std::int32_t> cur(nvars, 0);
    enumerate_rec(0, degree, cur, out);
    return out;
}

std::vector<Monomial> enumerate_monomials(std::size_t nvars, std::int64_t degree,
                                          const TropicalOrder& order) {
    if (nvars != order.nvars())
        throw DomainError("enumerate_monomials: bad variable count");
    std::vector<Monomial> out = all_monomials(nvars, degree);
    std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
        return order.unit_term_cmp(a, b) > 0;
    });
    return out;
}

std::string tiebreak_name(Tiebreak t) {
    return t == Tiebreak::Grevlex ? "grevlex" : "lex";
}

Tiebreak tiebreak_from_name(const std::string& name) {
    if (name == "grevlex") return Tiebreak::Grevlex;
    if (name == "lex") return Tiebreak::Lex;
    throw DomainError("unknown tiebreak order: " + name);
}

} // namespace tropgb
