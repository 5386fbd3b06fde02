#include "algebra/zpoly.hpp"

#include <sstream>

namespace qar::alg {

const RatFunc& ZPoly::leading() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "leading() of zero z-polynomial");
    return c_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

ZPoly ZPoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    ZPoly r = *this;
    RatFunc il = c_.back().inv();
    for (auto& x : r.c_) x *= il;
    return r;
}

RatFunc ZPoly::eval_z(const RatFunc& zv) const {
    RatFunc acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * zv + *it;
    return acc;
}

ZPoly ZPoly::scaled_z(const RatFunc& u) const {
    ZPoly r = *this;
    RatFunc p(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= p;
        p *= u;
    }
    r.trim();
    return r;
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c_[k].str();
        } else {
            if (!c_[k].is_one()) os << "(" << c_[k].str() << ")*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

void divrem(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "z-polynomial division by zero");
    quot = ZPoly();
    rem = a;
    int db = b.deg();
    RatFunc il = b.leading().inv();
    std::vector<RatFunc> q(std::max(0, a.deg() - db + 1));
    while (!rem.is_zero() && rem.deg() >= db) {
        int k = rem.deg() - db;
        RatFunc f = rem.leading() * il;
        q[k] = f;
        std::vector<RatFunc> sub(k + db + 1);
        for (int j = 0; j <= db; ++j) sub[k + j] = f * b.coeff(j);
        rem = rem - ZPoly(std::move(sub));
        if (!rem.is_zero() && rem.deg() == k + db)
            throw Error(ErrorKind::Internal, "divrem failed to reduce degree");
    }
    quot = ZPoly(std::move(q));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly u = a, v = b;
    while (!v.is_zero()) {
        ZPoly q, r;
        divrem(u, v, q, r);
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

ZPoly lcm(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    ZPoly g = gcd(a, b);
    ZPoly q, r;
    divrem(a, g, q, r);
    return (q * b).monic();
}

ZRat ZRat::operator-() const {
    ZRat r = *this;
    r.num_ = -r.num_;
    return r;
}

void ZRat::reduce() {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "z-rational with zero denominator");
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        ZPoly q, r;
        divrem(num_, g, q, r);
        num_ = std::move(q);
        divrem(den_, g, q, r);
        den_ = std::move(q);
    }
    if (!den_.is_monic()) {
        RatFunc il = den_.leading().inv();
        std::vector<RatFunc> nn = num_.coeffs(), dd = den_.coeffs();
        for (auto& x : nn) x *= il;
        for (auto& x : dd) x *= il;
        num_ = ZPoly(std::move(nn));
        den_ = ZPoly(std::move(dd));
    }
}

ZRat ZRat::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    ZRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

ZRat operator+(const ZRat& a, const ZRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ZRat r;
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

ZRat operator-(const ZRat& a, const ZRat& b) { return a + (-b); }

ZRat operator*(const ZRat& a, const ZRat& b) {
    if (a.is_zero() || b.is_zero()) return ZRat();
    ZRat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.reduce();
    return r;
}

ZRat operator/(const ZRat& a, const ZRat& b) { return a * b.inv(); }

Rat ZRat::eval(const Rat& qv, const Rat& zv) const {
    auto ev = [&](const ZPoly& p) {
        Rat acc = 0;
        for (int k = p.deg(); k >= 0; --k) acc = acc * zv + p.coeff(k).eval(qv);
        return acc;
    };
    Rat d = ev(den_);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "ZRat::eval hits a pole");
    return ev(num_) / d;
}

std::string ZRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

NegQPowFactors factor_neg_q_powers(ZPoly p, int smin, int smax) {
    NegQPowFactors out;
    if (p.is_zero()) return out;
    // strip z^k
    {
        std::vector<RatFunc> c = p.coeffs();
        size_t k = 0;
        while (k < c.size() && c[k].is_zero()) ++k;
        if (k > 0) {
            out.zpower = static_cast<int>(k);
            c.erase(c.begin(), c.begin() + k);
            p = ZPoly(std::move(c));
        }
    }
    for (int s = smin; s <= smax && !p.is_constant(); ++s) {
        RatFunc root(Laurent::neg_q_pow(s));
        while (!p.is_constant() && p.eval_z(root).is_zero()) {
            ZPoly q, r;
            divrem(p, ZPoly::z_minus_neg_q_pow(s), q, r);
            if (!r.is_zero()) throw Error(ErrorKind::Internal, "root division left a remainder");
            p = std::move(q);
            out.exps[s] += 1;
        }
    }
    out.complete = p.is_constant();
    return out;
}

}  // namespace qar::alg
