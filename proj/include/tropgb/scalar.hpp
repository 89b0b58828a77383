#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropgb/errors.hpp"
#include "tropgb/valuation.hpp"

namespace tropgb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// p-adic valuation of a nonzero integer (number of factors p).
std::int64_t padic_valuation(const BigInt& n, std::int64_t p);

/// b^-1 mod m for b coprime to m (m > 1).
BigInt mod_inverse(const BigInt& b, const BigInt& m);

/// p^e for e >= 0.
BigInt pow_int(std::int64_t p, std::int64_t e);

/// Exact field element: an arbitrary-precision rational together with the
/// prime of the valuation. Valuation is computed eagerly so values are
/// freely shareable across threads.
class ExactScalar {
public:
    ExactScalar(BigRat value, std::int64_t prime);

    const BigRat& value() const { return value_; }
    std::int64_t prime() const { return prime_; }
    bool is_zero() const { return value_ == 0; }
    ExtVal valuation() const { return val_; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar negate() const;

    bool operator==(const ExactScalar& o) const {
        return prime_ == o.prime_ && value_ == o.value_;
    }

    std::string str() const;

private:
    void check_same(const ExactScalar& o) const;

    BigRat value_;
    std::int64_t prime_;
    ExtVal val_;
};

/// Finite-precision element of a p-adic field. Three states:
///   - a known value  u * p^v + O(p^m)  with unit u (u % p != 0, v < m),
///   - indistinguishable from zero, O(p^m),
///   - structural zero (placed symbolically, e.g. by a pivoting step).
class CappedScalar {
public:
    enum class Kind { StructuralZero, Unknown, Value };

    static CappedScalar structural_zero(std::int64_t prime);
    static CappedScalar unknown_zero(std::int64_t prime, std::int64_t prec_abs);
    /// u * p^v + O(p^m); u is reduced mod p^(m-v) and must stay a unit.
    static CappedScalar from_unit(BigInt unit, std::int64_t val, std::int64_t prec_abs,
                                  std::int64_t prime);
    /// Truncation of an exact rational to absolute precision prec_abs.
    static CappedScalar from_rational(const BigRat& value, std::int64_t prec_abs,
                                      std::int64_t prime);

    Kind kind() const { return kind_; }
    std::int64_t prime() const { return prime_; }
    bool is_structural_zero() const { return kind_ == Kind::StructuralZero; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    bool distinguishable_from_zero() const { return kind_ == Kind::Value; }

    /// Unit part of a known value.
    const BigInt& unit() const;
    /// Valuation of a known value.
    std::int64_t val() const;
    /// Absolute precision exponent m; infinity for a structural zero.
    ExtVal prec_abs() const;

    ValuationInfo valuation() const;

    /// Rational representative u * p^v (lowest non-negative unit).
    BigRat representative() const;

    CappedScalar operator+(const CappedScalar& o) const;
    CappedScalar operator-(const CappedScalar& o) const;
    CappedScalar operator*(const CappedScalar& o) const;
    CappedScalar operator/(const CappedScalar& o) const;
    CappedScalar negate() const;

    bool operator==(const CappedScalar& o) const;

    std::string str() const;

private:
    CappedScalar(Kind kind, std::int64_t prime) : kind_(kind), prime_(prime) {}
    void check_same(const CappedScalar& o) const;

    Kind kind_;
    std::int64_t prime_;
    BigInt unit_;          // Value only
    std::int64_t val_ = 0; // Value only
    std::int64_t prec_ = 0; // Value and Unknown
};

enum class Backend { Exact, Capped };

/// A field element abstracted over the valuation backend. Arithmetic
/// between different backends or different primes is a BackendError.
class Scalar {
public:
    explicit Scalar(ExactScalar s) : v_(std::move(s)) {}
    explicit Scalar(CappedScalar s) : v_(std::move(s)) {}

    static Scalar exact(BigRat value, std::int64_t prime) {
        return Scalar(ExactScalar(std::move(value), prime));
    }
    static Scalar exact_int(long long value, std::int64_t prime) {
        return Scalar(ExactScalar(BigRat(value), prime));
    }
    /// Additive identity matching the backend, prime of `model`; in the
    /// capped backend this is the structural zero.
    static Scalar zero_like(const Scalar& model);

    Backend backend() const {
        return std::holds_alternative<ExactScalar>(v_) ? Backend::Exact : Backend::Capped;
    }
    std::int64_t prime() const;

    bool is_exact() const { return backend() == Backend::Exact; }
    const ExactScalar& as_exact() const;
    const CappedScalar& as_capped() const;

    /// True for exact zero and for the capped structural zero.
    bool is_structural_zero() const;
    /// True for a capped O(p^m) (cancellation residue); always false for exact.
    bool is_unknown_zero() const;
    bool distinguishable_from_zero() const {
        return !is_structural_zero() && !is_unknown_zero();
    }

    ValuationInfo valuation() const;
    /// Absolute precision: +infinity in the exact backend.
    ExtVal prec_abs() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar negate() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Truncation to the capped backend at absolute precision prec_abs.
    /// Exact input is truncated; capped input is re-capped (never gaining
    /// precision).
    Scalar truncate(std::int64_t prec_abs) const;

    std::string str() const;

private:
    template <typename F>
    Scalar binop(const Scalar& o, F&& f) const;

    std::variant<ExactScalar, CappedScalar> v_;
};

} // namespace tropgb
