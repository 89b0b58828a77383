#pragma once

#include <cstdint>
#include <string>

#include "tropgb/errors.hpp"

namespace tropgb {

/// Value group element extended with +infinity (the valuation of zero).
class ExtVal {
public:
    ExtVal() : v_(0), inf_(false) {}
    ExtVal(std::int64_t v) : v_(v), inf_(false) {} // NOLINT: implicit by design

    static ExtVal infinity() {
        ExtVal e;
        e.inf_ = true;
        return e;
    }

    bool is_infinity() const { return inf_; }

    std::int64_t finite() const {
        if (inf_) throw DomainError("ExtVal: +infinity has no finite value");
        return v_;
    }

    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
    friend bool operator<(const ExtVal& a, const ExtVal& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtVal& a, const ExtVal& b) { return a < b || a == b; }
    friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
    friend bool operator>=(const ExtVal& a, const ExtVal& b) { return b <= a; }

    friend ExtVal operator+(const ExtVal& a, const ExtVal& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtVal(a.v_ + b.v_);
    }

    std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }

private:
    std::int64_t v_;
    bool inf_;
};

inline ExtVal min(const ExtVal& a, const ExtVal& b) { return a < b ? a : b; }
inline ExtVal max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }

/// Result of querying a scalar's valuation. For a capped value that is
/// indistinguishable from zero only a lower bound is known and
/// `lower_bound_only` is set.
struct ValuationInfo {
    ExtVal value;
    bool lower_bound_only = false;
};

} // namespace tropgb
