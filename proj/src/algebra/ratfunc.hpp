#pragma once

#include "algebra/laurent.hpp"

namespace qar::alg {

/// Element of the field Q(q), kept reduced.
///
/// Canonical form: the denominator is an ordinary polynomial (lowest
/// exponent 0) whose trailing coefficient is 1, and gcd(num, den) is a
/// unit. Equality is then member comparison.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long n) : num_(n) {}
    RatFunc(const Rat& r) : num_(Laurent(r)) {}
    RatFunc(Laurent n) : num_(std::move(n)) {}
    RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc q(int exp = 1) { return RatFunc(Laurent::q(exp)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inv() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    Rat eval(const Rat& qv) const;
    std::string str() const;

private:
    void reduce();

    Laurent num_;
    Laurent den_ = Laurent(1);
};

}  // namespace qar::alg
