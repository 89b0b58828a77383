#include "tropgb/poly.hpp"

#include <algorithm>

namespace tropgb {

HomogeneousPoly HomogeneousPoly::from_terms(std::size_t nvars,
                                            const std::vector<Term>& terms) {
    if (terms.empty())
        throw DomainError("cannot infer degree from an empty term list");
    HomogeneousPoly f(nvars, terms.front().mon.degree());
    for (const Term& t : terms) f.add_term(t.mon, t.coeff);
    return f;
}

bool HomogeneousPoly::distinguishable_terms_empty() const {
    for (const auto& [m, c] : terms_)
        if (c.distinguishable_from_zero()) return false;
    return true;
}

std::optional<Scalar> HomogeneousPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

void HomogeneousPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw DomainError("term variable count mismatch");
    if (m.degree() != degree_)
        throw DomainError("non-homogeneous term: degree " + std::to_string(m.degree()) +
                          " in a degree-" + std::to_string(degree_) + " polynomial");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_structural_zero()) terms_.emplace(m, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_structural_zero())
        terms_.erase(it);
    else
        it->second = s;
}

HomogeneousPoly HomogeneousPoly::multiply_by_monomial(const Monomial& m) const {
    HomogeneousPoly out(nvars_, degree_ + m.degree());
    for (const auto& [mon, c] : terms_) out.add_term(mon * m, c);
    return out;
}

HomogeneousPoly HomogeneousPoly::scale(const Scalar& c) const {
    HomogeneousPoly out(nvars_, degree_);
    for (const auto& [mon, coeff] : terms_) out.add_term(mon, coeff * c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw DomainError("adding polynomials of different shape");
    HomogeneousPoly out = *this;
    for (const auto& [mon, c] : o.terms_) out.add_term(mon, c);
    return out;
}

std::vector<Term> HomogeneousPoly::sorted_terms(const TropicalOrder& order) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ts.push_back({c, m});
    // Display order: by (value or value bound, tie-break). Deterministic and
    // total; rigorous leading-term extraction lives in leading_term().
    std::sort(ts.begin(), ts.end(), [&order](const Term& a, const Term& b) {
        TermValue va = term_value(a, order), vb = term_value(b, order);
        if (va.value != vb.value) return va.value < vb.value;
        return order.classical_cmp(a.mon, b.mon) > 0;
    });
    return ts;
}

Term leading_term(const HomogeneousPoly& f, const TropicalOrder& order) {
    if (f.is_zero()) throw DomainError("leading term of the zero polynomial");

    const Term* best = nullptr;
    ExtVal best_value;
    std::vector<Term> ts;
    for (const auto& [m, c] : f.terms()) ts.push_back({c, m});

    for (const Term& t : ts) {
        if (!t.coeff.distinguishable_from_zero()) continue;
        ExtVal v = term_value(t, order).value;
        if (best == nullptr || v < best_value ||
            (v == best_value && order.classical_cmp(t.mon, best->mon) > 0)) {
            best = &t;
            best_value = v;
        }
    }
    if (best == nullptr)
        throw PrecisionError("all coefficients indistinguishable from zero");

    // A residue O(p^m) x^beta is certainly smaller only when m + w.beta
    // strictly exceeds the candidate's value.
    for (const Term& t : ts) {
        if (t.coeff.distinguishable_from_zero()) continue;
        TermValue bound = term_value(t, order);
        if (!(bound.value > best_value))
            throw PrecisionError("leading term undetermined at this precision");
    }
    return *best;
}

Monomial leading_monomial(const HomogeneousPoly& f, const TropicalOrder& order) {
    return leading_term(f, order).mon;
}

std::string HomogeneousPoly::str(const std::vector<std::string>& vars,
                                 const TropicalOrder& order) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : sorted_terms(order)) {
        std::string c = t.coeff.str();
        bool compound = c.find_first_of("+-") != std::string::npos &&
                        c.find_first_of("+-") != 0;
        std::string mon = t.mon.str(vars);
        std::string piece;
        if (mon == "1") {
            piece = compound ? "(" + c + ")" : c;
        } else if (c == "1") {
            piece = mon;
        } else if (c == "-1") {
            piece = "-" + mon;
        } else {
            piece = (compound ? "(" + c + ")" : c) + "*" + mon;
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

} // namespace tropgb
