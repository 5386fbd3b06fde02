#include "algebra/ratfunc.hpp"

namespace qar::alg {

void RatFunc::reduce() {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // normalize: den ordinary with trailing coefficient 1, q-units into num
    int shift = -den_.low();
    den_ = den_.shifted(shift);
    num_ = num_.shifted(shift);
    Rat t = den_.trailing();
    if (t != 1) {
        Rat it = 1 / t;
        den_.scale(it);
        num_.scale(it);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.reduce();
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-reduce first to keep intermediate products small
    Laurent g1 = gcd(a.num_, b.den_);
    Laurent g2 = gcd(b.num_, a.den_);
    Laurent n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
    Laurent d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
    Laurent n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
    Laurent d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
    RatFunc r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    r.reduce();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

Rat RatFunc::eval(const Rat& qv) const {
    Rat d = den_.eval(qv);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "RatFunc::eval hits a pole");
    return num_.eval(qv) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

}  // namespace qar::alg
