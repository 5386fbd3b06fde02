#include "algebra/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qar::alg {

Laurent Laurent::monomial(const Rat& coeff, int exp) {
    Laurent r;
    if (coeff != 0) {
        r.low_ = exp;
        r.c_.assign(1, coeff);
    }
    return r;
}

Laurent Laurent::qint(int m) {
    // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}, [-m] = -[m], [0] = 0
    Laurent r;
    if (m == 0) return r;
    int a = std::abs(m);
    r.low_ = 1 - a;
    r.c_.assign(2 * a - 1, 0);
    for (int k = 0; k < a; ++k) r.c_[2 * k] = (m > 0) ? 1 : -1;
    r.trim();
    return r;
}

void Laurent::trim() {
    size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    size_t e = c_.size();
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (b > 0) c_.erase(c_.begin(), c_.begin() + b);
    c_.resize(e - b);
    low_ += static_cast<int>(b);
}

int Laurent::low() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "low() of zero polynomial");
    return low_;
}

int Laurent::high() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "high() of zero polynomial");
    return low_ + static_cast<int>(c_.size()) - 1;
}

Rat Laurent::coeff(int exp) const {
    if (exp < low_ || exp >= low_ + static_cast<int>(c_.size())) return 0;
    return c_[exp - low_];
}

const Rat& Laurent::leading() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "leading() of zero polynomial");
    return c_.back();
}

const Rat& Laurent::trailing() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "trailing() of zero polynomial");
    return c_.front();
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int nlow = std::min(low_, o.low_);
    int nhigh = std::max(high(), o.high());
    std::vector<Rat> nc(nhigh - nlow + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) nc[low_ + i - nlow] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) nc[o.low_ + i - nlow] += o.c_[i];
    low_ = nlow;
    c_ = std::move(nc);
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Laurent Laurent::shifted(int d) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += d;
    return r;
}

void Laurent::scale(const Rat& r) {
    if (r == 0) {
        c_.clear();
        low_ = 0;
        return;
    }
    for (auto& x : c_) x *= r;
}

Rat Laurent::eval(const Rat& qv) const {
    if (is_zero()) return 0;
    if (qv == 0) throw Error(ErrorKind::InvalidArgument, "Laurent::eval at q = 0");
    // Horner on the ordinary polynomial part, then multiply by qv^low.
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * qv + *it;
    int e = low_;
    Rat p = 1;
    Rat base = (e >= 0) ? qv : Rat(Rat(1) / qv);
    for (int k = std::abs(e); k > 0; --k) p *= base;
    return acc * p;
}

Laurent Laurent::inverted_q() const {
    Laurent r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
}

std::string Laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rat& co = c_[i];
        if (co == 0) continue;
        int e = low_ + i;
        Rat abs = co > 0 ? co : Rat(-co);
        if (first) {
            if (co < 0) os << "-";
            first = false;
        } else {
            os << (co < 0 ? " - " : " + ");
        }
        bool unit = (abs == 1);
        if (e == 0 || !unit) os << abs.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

using ZVec = std::vector<mpz_class>;

// primitive integer form of the ordinary-polynomial part (low stripped)
ZVec to_primitive(const Laurent& a) {
    ZVec v;
    mpz_class den_lcm = 1;
    for (int e = a.low(); e <= a.high(); ++e) {
        Rat c = a.coeff(e);
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class content = 0;
    for (int e = a.low(); e <= a.high(); ++e) {
        Rat c = a.coeff(e);
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        v.push_back(num);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (content != 0)
        for (auto& x : v) x /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

ZVec zcontent_free(ZVec v) {
    mpz_class content = 0;
    for (auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content != 0 && content != 1)
        for (auto& x : v) x /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

// pseudo-remainder of a by b (deg a >= deg b, b nonempty)
ZVec prem(ZVec a, const ZVec& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero() || b.is_zero()) {
        ZVec v = to_primitive(a.is_zero() ? b : a);
        Laurent r;
        r.low_ = 0;
        for (auto& x : v) r.c_.push_back(Rat(x));
        r.trim();
        return r;
    }
    ZVec u = to_primitive(a), v = to_primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    // primitive PRS
    while (!v.empty()) {
        ZVec r = zcontent_free(prem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    u = zcontent_free(std::move(u));
    Laurent r;
    r.low_ = 0;
    for (auto& x : u) r.c_.push_back(Rat(x));
    r.trim();
    return r;
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by zero");
    if (a.is_zero()) return Laurent();
    Laurent r;
    std::vector<Rat> rem = a.c_;
    int da = static_cast<int>(a.c_.size()) - 1;
    int db = static_cast<int>(b.c_.size()) - 1;
    if (da < db) throw Error(ErrorKind::Internal, "Laurent exact_div: not divisible");
    std::vector<Rat> quot(da - db + 1, 0);
    for (int i = da - db; i >= 0; --i) {
        Rat f = rem[i + db] / b.c_.back();
        quot[i] = f;
        if (f != 0)
            for (int j = 0; j <= db; ++j) rem[i + j] -= f * b.c_[j];
    }
    for (auto& x : rem)
        if (x != 0) throw Error(ErrorKind::Internal, "Laurent exact_div: not divisible");
    r.c_ = std::move(quot);
    r.low_ = a.low_ - b.low_;
    r.trim();
    return r;
}

}  // namespace qar::alg
