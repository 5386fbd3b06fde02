#pragma once

#include <map>

#include "algebra/ratfunc.hpp"

namespace qar::alg {

/// Polynomial in the spectral variable z over Q(q).
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long n) : c_{RatFunc(n)} { trim(); }
    ZPoly(RatFunc r) : c_{std::move(r)} { trim(); }
    explicit ZPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly z(int exp = 1) {
        std::vector<RatFunc> c(exp + 1);
        c[exp] = RatFunc(1);
        return ZPoly(std::move(c));
    }
    /// z - (-q)^s
    static ZPoly z_minus_neg_q_pow(int s) {
        std::vector<RatFunc> c(2);
        c[0] = RatFunc(-Laurent::neg_q_pow(s));
        c[1] = RatFunc(1);
        return ZPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // deg(0) = -1
    const RatFunc& leading() const;
    RatFunc coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : RatFunc(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

    ZPoly monic() const;
    RatFunc eval_z(const RatFunc& zv) const;
    /// substitute z -> u*z for a unit u in Q(q): coeff of z^k scaled by u^k
    ZPoly scaled_z(const RatFunc& u) const;
    std::string str() const;

    friend void divrem(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFunc> c_;
};

/// monic gcd in z
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// monic lcm in z
ZPoly lcm(const ZPoly& a, const ZPoly& b);

/// Element of Q(q)(z), reduced; denominator monic in z.
class ZRat {
public:
    ZRat() = default;
    ZRat(long n) : num_(n) {}
    ZRat(RatFunc r) : num_(std::move(r)) {}
    ZRat(ZPoly n) : num_(std::move(n)) {}
    ZRat(ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static ZRat z(int exp = 1) {
        return exp >= 0 ? ZRat(ZPoly::z(exp)) : ZRat(ZPoly(1), ZPoly::z(-exp));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    ZRat operator-() const;
    ZRat inv() const;
    friend ZRat operator+(const ZRat& a, const ZRat& b);
    friend ZRat operator-(const ZRat& a, const ZRat& b);
    friend ZRat operator*(const ZRat& a, const ZRat& b);
    friend ZRat operator/(const ZRat& a, const ZRat& b);
    ZRat& operator+=(const ZRat& o) { return *this = *this + o; }
    ZRat& operator-=(const ZRat& o) { return *this = *this - o; }
    ZRat& operator*=(const ZRat& o) { return *this = *this * o; }
    friend bool operator==(const ZRat& a, const ZRat& b) = default;

    Rat eval(const Rat& qv, const Rat& zv) const;
    std::string str() const;

private:
    void reduce();

    ZPoly num_;
    ZPoly den_ = ZPoly(1);
};

/// Factorization of a monic z-polynomial into z^k * prod (z - (-q)^s).
struct NegQPowFactors {
    int zpower = 0;
    std::map<int, int> exps;  // s -> multiplicity
    bool complete = false;    // true iff the remainder was a constant
};

/// Try to factor p over the candidate roots z = (-q)^s, smin <= s <= smax.
NegQPowFactors factor_neg_q_powers(ZPoly p, int smin, int smax);

}  // namespace qar::alg
