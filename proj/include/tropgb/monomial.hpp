#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tropgb/errors.hpp"

namespace tropgb {

/// Exponent vector of a monomial in n variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> exponents)
        : e_(std::move(exponents)) {
        for (auto x : e_)
            if (x < 0) throw DomainError("negative exponent");
    }
    static Monomial one(std::size_t nvars) {
        return Monomial(std::vector<std::int32_t>(nvars, 0));
    }

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    std::int64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    Monomial operator*(const Monomial& o) const {
        check_vars(o);
        std::vector<std::int32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return Monomial(std::move(r));
    }

    bool divides(const Monomial& o) const {
        check_vars(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient o / this; requires divisibility.
    Monomial divide_into(const Monomial& o) const {
        check_vars(o);
        std::vector<std::int32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r[i] = o.e_[i] - e_[i];
            if (r[i] < 0) throw DomainError("monomial division with remainder");
        }
        return Monomial(std::move(r));
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Structural (container) order; not a term order.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

    std::string str(const std::vector<std::string>& vars) const {
        if (vars.size() != e_.size()) throw DomainError("variable list size mismatch");
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void check_vars(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw DomainError("monomials over different variable counts");
    }

    std::vector<std::int32_t> e_;
};

} // namespace tropgb
