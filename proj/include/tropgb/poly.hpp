#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropgb/order.hpp"

namespace tropgb {

/// Homogeneous polynomial as a sparse term map. Exact zero coefficients are
/// never stored; capped O(p^m) coefficients are kept (they carry precision
/// information relevant to leading-term decisions).
class HomogeneousPoly {
public:
    /// Zero polynomial of the given degree.
    HomogeneousPoly(std::size_t nvars, std::int64_t degree)
        : nvars_(nvars), degree_(degree) {}

    /// Builds from terms; rejects mixed degrees / variable counts / backends.
    static HomogeneousPoly from_terms(std::size_t nvars, const std::vector<Term>& terms);

    std::size_t nvars() const { return nvars_; }
    std::int64_t degree() const { return degree_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when no coefficient is distinguishable from zero.
    bool distinguishable_terms_empty() const;

    std::optional<Scalar> coeff(const Monomial& m) const;

    /// Adds c * x^m into the polynomial (used by builders).
    void add_term(const Monomial& m, const Scalar& c);

    HomogeneousPoly multiply_by_monomial(const Monomial& m) const;
    HomogeneousPoly scale(const Scalar& c) const;
    HomogeneousPoly operator+(const HomogeneousPoly& o) const;

    bool operator==(const HomogeneousPoly& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

    /// Terms sorted decreasingly under the order (greatest first). Requires
    /// every term comparable at the available precision.
    std::vector<Term> sorted_terms(const TropicalOrder& order) const;

    std::string str(const std::vector<std::string>& vars,
                    const TropicalOrder& order) const;

private:
    std::size_t nvars_;
    std::int64_t degree_;
    std::map<Monomial, Scalar> terms_;
};

Term leading_term(const HomogeneousPoly& f, const TropicalOrder& order);
Monomial leading_monomial(const HomogeneousPoly& f, const TropicalOrder& order);

} // namespace tropgb
