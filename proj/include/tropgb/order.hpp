#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropgb/monomial.hpp"
#include "tropgb/scalar.hpp"

namespace tropgb {

enum class Tiebreak { Grevlex, Lex };

/// A term with a coefficient that must be distinguishable from zero when the
/// term stands alone; inside polynomials capped coefficients may degrade to
/// O(p^m) residues.
struct Term {
    Scalar coeff;
    Monomial mon;
};

/// Value of a term under a weight vector: val(coeff) + w . exponents. The
/// value may only be known as a lower bound for capped coefficients.
struct TermValue {
    ExtVal value;
    bool lower_bound_only = false;
};

/// Outcome of comparing two terms of equal degree. Greater means strictly
/// greater (smaller value, or equal value with the tie-break monomial order
/// deciding). Terms with equal value on the same monomial have equal rank;
/// they are Identical when the coefficients also agree.
enum class TermCmp { Greater, Less, EqualRank, Identical };

/// Weight vector plus a classical monomial order breaking value ties.
struct TropicalOrder {
    std::vector<std::int64_t> weight;
    Tiebreak tiebreak = Tiebreak::Grevlex;

    std::size_t nvars() const { return weight.size(); }

    std::int64_t weight_dot(const Monomial& m) const;

    /// Classical tie-break comparison: +1 if a is greater, -1 if b, 0 equal.
    int classical_cmp(const Monomial& a, const Monomial& b) const;

    /// Comparison of unit-coefficient terms (by w.alpha, then tie-break);
    /// +1 if a is the greater term. Total on monomials of equal degree.
    int unit_term_cmp(const Monomial& a, const Monomial& b) const;
};

TermValue term_value(const Term& t, const TropicalOrder& order);

/// Total comparison per the tropical term order. Throws PrecisionError when
/// capped coefficients leave the order undecided.
TermCmp compare_terms(const Term& a, const Term& b, const TropicalOrder& order);

/// All monomials of degree d in n variables in a fixed enumeration order
/// (independent of any term order).
std::vector<Monomial> all_monomials(std::size_t nvars, std::int64_t degree);

/// All monomials of degree d in n variables, sorted decreasingly as
/// unit-coefficient terms under the order (column-label order).
std::vector<Monomial> enumerate_monomials(std::size_t nvars, std::int64_t degree,
                                          const TropicalOrder& order);

std::string tiebreak_name(Tiebreak t);
Tiebreak tiebreak_from_name(const std::string& name);

} // namespace tropgb
