#include "tropgb/scalar.hpp"

#include <utility>

namespace tropgb {

std::int64_t padic_valuation(const BigInt& n, std::int64_t p) {
    if (n == 0) throw DomainError("padic_valuation of zero");
    BigInt m = abs(n);
    std::int64_t v = 0;
    BigInt q, r;
    for (;;) {
        divide_qr(m, BigInt(p), q, r);
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

BigInt mod_inverse(const BigInt& b, const BigInt& m) {
    // extended Euclid
    BigInt r0 = m, r1 = b % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw DomainError("mod_inverse: not invertible");
    if (t0 < 0) t0 += m;
    return t0;
}

BigInt pow_int(std::int64_t p, std::int64_t e) {
    if (e < 0) throw DomainError("pow_int: negative exponent");
    BigInt base = p, out = 1;
    std::int64_t k = e;
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

// --- ExactScalar ------------------------------------------------------

ExactScalar::ExactScalar(BigRat value, std::int64_t prime)
    : value_(std::move(value)), prime_(prime) {
    if (prime_ < 2) throw DomainError("prime must be >= 2");
    if (value_ == 0) {
        val_ = ExtVal::infinity();
    } else {
        val_ = ExtVal(padic_valuation(numerator(value_), prime_) -
                      padic_valuation(denominator(value_), prime_));
    }
}

void ExactScalar::check_same(const ExactScalar& o) const {
    if (prime_ != o.prime_)
        throw BackendError("exact scalars with different primes");
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    check_same(o);
    return ExactScalar(value_ + o.value_, prime_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    check_same(o);
    return ExactScalar(value_ - o.value_, prime_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    check_same(o);
    return ExactScalar(value_ * o.value_, prime_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    check_same(o);
    if (o.value_ == 0) throw DomainError("division by zero");
    return ExactScalar(value_ / o.value_, prime_);
}

ExactScalar ExactScalar::negate() const { return ExactScalar(-value_, prime_); }

std::string ExactScalar::str() const {
    std::string s = numerator(value_).str();
    if (denominator(value_) != 1) s += "/" + denominator(value_).str();
    return s;
}

// --- CappedScalar -----------------------------------------------------

CappedScalar CappedScalar::structural_zero(std::int64_t prime) {
    if (prime < 2) throw DomainError("prime must be >= 2");
    return CappedScalar(Kind::StructuralZero, prime);
}

CappedScalar CappedScalar::unknown_zero(std::int64_t prime, std::int64_t prec_abs) {
    if (prime < 2) throw DomainError("prime must be >= 2");
    CappedScalar s(Kind::Unknown, prime);
    s.prec_ = prec_abs;
    return s;
}

CappedScalar CappedScalar::from_unit(BigInt unit, std::int64_t val,
                                     std::int64_t prec_abs, std::int64_t prime) {
    if (prime < 2) throw DomainError("prime must be >= 2");
    if (val >= prec_abs) return unknown_zero(prime, prec_abs);
    BigInt mod = pow_int(prime, prec_abs - val);
    unit %= mod;
    if (unit < 0) unit += mod;
    if (unit == 0) return unknown_zero(prime, prec_abs);
    if (unit % prime == 0)
        throw DomainError("capped scalar: unit part divisible by p");
    CappedScalar s(Kind::Value, prime);
    s.unit_ = std::move(unit);
    s.val_ = val;
    s.prec_ = prec_abs;
    return s;
}

CappedScalar CappedScalar::from_rational(const BigRat& value, std::int64_t prec_abs,
                                         std::int64_t prime) {
    if (prime < 2) throw DomainError("prime must be >= 2");
    if (value == 0) return unknown_zero(prime, prec_abs);
    BigInt num = numerator(value), den = denominator(value);
    std::int64_t v = padic_valuation(num, prime) - padic_valuation(den, prime);
    if (v >= prec_abs) return unknown_zero(prime, prec_abs);
    BigInt pv_num = pow_int(prime, padic_valuation(num, prime));
    BigInt pv_den = pow_int(prime, padic_valuation(den, prime));
    BigInt a = num / pv_num;
    BigInt b = den / pv_den;
    BigInt mod = pow_int(prime, prec_abs - v);
    BigInt unit = (a % mod) * mod_inverse(b, mod) % mod;
    return from_unit(std::move(unit), v, prec_abs, prime);
}

const BigInt& CappedScalar::unit() const {
    if (kind_ != Kind::Value) throw DomainError("no unit part: not a known value");
    return unit_;
}

std::int64_t CappedScalar::val() const {
    if (kind_ != Kind::Value) throw DomainError("no valuation: not a known value");
    return val_;
}

ExtVal CappedScalar::prec_abs() const {
    if (kind_ == Kind::StructuralZero) return ExtVal::infinity();
    return ExtVal(prec_);
}

ValuationInfo CappedScalar::valuation() const {
    switch (kind_) {
    case Kind::StructuralZero: return {ExtVal::infinity(), false};
    case Kind::Unknown: return {ExtVal(prec_), true};
    default: return {ExtVal(val_), false};
    }
}

BigRat CappedScalar::representative() const {
    if (kind_ != Kind::Value) return BigRat(0);
    if (val_ >= 0) return BigRat(unit_ * pow_int(prime_, val_));
    return BigRat(unit_, pow_int(prime_, -val_));
}

void CappedScalar::check_same(const CappedScalar& o) const {
    if (prime_ != o.prime_)
        throw BackendError("capped scalars with different primes");
}

CappedScalar CappedScalar::operator+(const CappedScalar& o) const {
    check_same(o);
    if (kind_ == Kind::StructuralZero) return o;
    if (o.kind_ == Kind::StructuralZero) return *this;
    if (kind_ == Kind::Unknown && o.kind_ == Kind::Unknown)
        return unknown_zero(prime_, std::min(prec_, o.prec_));
    if (kind_ == Kind::Unknown || o.kind_ == Kind::Unknown) {
        const CappedScalar& known = kind_ == Kind::Value ? *this : o;
        const CappedScalar& unk = kind_ == Kind::Unknown ? *this : o;
        std::int64_t m = std::min(known.prec_, unk.prec_);
        if (known.val_ >= m) return unknown_zero(prime_, m);
        return from_unit(known.unit_, known.val_, m, prime_);
    }
    std::int64_t m = std::min(prec_, o.prec_);
    std::int64_t v0 = std::min(val_, o.val_);
    if (v0 >= m) return unknown_zero(prime_, m);
    BigInt sum = unit_ * pow_int(prime_, val_ - v0) +
                 o.unit_ * pow_int(prime_, o.val_ - v0);
    BigInt mod = pow_int(prime_, m - v0);
    sum %= mod;
    if (sum < 0) sum += mod;
    if (sum == 0) return unknown_zero(prime_, m);
    std::int64_t shift = padic_valuation(sum, prime_);
    return from_unit(sum / pow_int(prime_, shift), v0 + shift, m, prime_);
}

CappedScalar CappedScalar::negate() const {
    if (kind_ != Kind::Value) return *this;
    return from_unit(-unit_, val_, prec_, prime_);
}

CappedScalar CappedScalar::operator-(const CappedScalar& o) const {
    return *this + o.negate();
}

CappedScalar CappedScalar::operator*(const CappedScalar& o) const {
    check_same(o);
    if (kind_ == Kind::StructuralZero || o.kind_ == Kind::StructuralZero)
        return structural_zero(prime_);
    if (kind_ == Kind::Unknown && o.kind_ == Kind::Unknown)
        return unknown_zero(prime_, prec_ + o.prec_);
    if (kind_ == Kind::Unknown || o.kind_ == Kind::Unknown) {
        const CappedScalar& known = kind_ == Kind::Value ? *this : o;
        const CappedScalar& unk = kind_ == Kind::Unknown ? *this : o;
        return unknown_zero(prime_, unk.prec_ + known.val_);
    }
    std::int64_t v = val_ + o.val_;
    std::int64_t m = std::min(prec_ + o.val_, o.prec_ + val_);
    return from_unit(unit_ * o.unit_, v, m, prime_);
}

CappedScalar CappedScalar::operator/(const CappedScalar& o) const {
    check_same(o);
    if (o.kind_ == Kind::StructuralZero) throw DomainError("division by zero");
    if (o.kind_ == Kind::Unknown)
        throw PrecisionError("division by a value indistinguishable from zero");
    if (kind_ == Kind::StructuralZero) return structural_zero(prime_);
    if (kind_ == Kind::Unknown) return unknown_zero(prime_, prec_ - o.val_);
    std::int64_t v = val_ - o.val_;
    std::int64_t rel = std::min(prec_ - val_, o.prec_ - o.val_);
    BigInt mod = pow_int(prime_, rel);
    BigInt q = unit_ % mod * mod_inverse(o.unit_ % mod, mod) % mod;
    return from_unit(std::move(q), v, v + rel, prime_);
}

bool CappedScalar::operator==(const CappedScalar& o) const {
    if (prime_ != o.prime_ || kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::StructuralZero: return true;
    case Kind::Unknown: return prec_ == o.prec_;
    default: return val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_;
    }
}

std::string CappedScalar::str() const {
    std::string pm = "O(" + std::to_string(prime_) + "^" + std::to_string(prec_) + ")";
    switch (kind_) {
    case Kind::StructuralZero: return "0";
    case Kind::Unknown: return pm;
    default: {
        BigRat r = representative();
        std::string s = numerator(r).str();
        if (denominator(r) != 1) s += "/" + denominator(r).str();
        return s + " + " + pm;
    }
    }
}

// --- Scalar -----------------------------------------------------------

Scalar Scalar::zero_like(const Scalar& model) {
    if (model.is_exact()) return Scalar(ExactScalar(BigRat(0), model.prime()));
    return Scalar(CappedScalar::structural_zero(model.prime()));
}

std::int64_t Scalar::prime() const {
    return is_exact() ? std::get<ExactScalar>(v_).prime()
                      : std::get<CappedScalar>(v_).prime();
}

const ExactScalar& Scalar::as_exact() const {
    if (!is_exact()) throw BackendError("expected exact backend");
    return std::get<ExactScalar>(v_);
}

const CappedScalar& Scalar::as_capped() const {
    if (is_exact()) throw BackendError("expected capped backend");
    return std::get<CappedScalar>(v_);
}

bool Scalar::is_structural_zero() const {
    if (is_exact()) return std::get<ExactScalar>(v_).is_zero();
    return std::get<CappedScalar>(v_).is_structural_zero();
}

bool Scalar::is_unknown_zero() const {
    return !is_exact() && std::get<CappedScalar>(v_).is_unknown();
}

ValuationInfo Scalar::valuation() const {
    if (is_exact()) return {std::get<ExactScalar>(v_).valuation(), false};
    return std::get<CappedScalar>(v_).valuation();
}

ExtVal Scalar::prec_abs() const {
    if (is_exact()) return ExtVal::infinity();
    return std::get<CappedScalar>(v_).prec_abs();
}

template <typename F>
Scalar Scalar::binop(const Scalar& o, F&& f) const {
    if (backend() != o.backend())
        throw BackendError("mixed exact/capped arithmetic");
    if (is_exact())
        return Scalar(f(std::get<ExactScalar>(v_), std::get<ExactScalar>(o.v_)));
    return Scalar(f(std::get<CappedScalar>(v_), std::get<CappedScalar>(o.v_)));
}

Scalar Scalar::operator+(const Scalar& o) const {
    return binop(o, [](const auto& a, const auto& b) { return a + b; });
}
Scalar Scalar::operator-(const Scalar& o) const {
    return binop(o, [](const auto& a, const auto& b) { return a - b; });
}
Scalar Scalar::operator*(const Scalar& o) const {
    return binop(o, [](const auto& a, const auto& b) { return a * b; });
}
Scalar Scalar::operator/(const Scalar& o) const {
    return binop(o, [](const auto& a, const auto& b) { return a / b; });
}

Scalar Scalar::negate() const {
    if (is_exact()) return Scalar(std::get<ExactScalar>(v_).negate());
    return Scalar(std::get<CappedScalar>(v_).negate());
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) return false;
    if (is_exact()) return std::get<ExactScalar>(v_) == std::get<ExactScalar>(o.v_);
    return std::get<CappedScalar>(v_) == std::get<CappedScalar>(o.v_);
}

Scalar Scalar::truncate(std::int64_t prec_abs) const {
    if (is_exact()) {
        return Scalar(
            CappedScalar::from_rational(std::get<ExactScalar>(v_).value(), prec_abs, prime()));
    }
    const CappedScalar& c = std::get<CappedScalar>(v_);
    switch (c.kind()) {
    case CappedScalar::Kind::StructuralZero:
        return Scalar(CappedScalar::unknown_zero(prime(), prec_abs));
    case CappedScalar::Kind::Unknown:
        return Scalar(CappedScalar::unknown_zero(
            prime(), std::min(prec_abs, c.prec_abs().finite())));
    default:
        return Scalar(CappedScalar::from_unit(
            c.unit(), c.val(), std::min(prec_abs, c.prec_abs().finite()), prime()));
    }
}

std::string Scalar::str() const {
    return is_exact() ? std::get<ExactScalar>(v_).str()
                      : std::get<CappedScalar>(v_).str();
}

} // namespace tropgb
