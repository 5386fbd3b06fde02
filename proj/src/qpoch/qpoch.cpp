#include "qpoch/qpoch.hpp"

#include <sstream>

namespace qar::qpoch {

PochExpr& PochExpr::mul_symbol(int m, int e) {
    check_index(m);
    if (e == 0) return *this;
    int& cur = f_[m];
    cur += e;
    if (cur == 0) f_.erase(m);
    return *this;
}

PochExpr operator*(const PochExpr& a, const PochExpr& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "rank parameters differ");
    PochExpr r = a;
    for (auto& [m, e] : b.f_) r.mul_symbol(m, e);
    return r;
}

PochExpr PochExpr::inverse() const {
    PochExpr r(n_);
    for (auto& [m, e] : f_) r.f_[m] = -e;
    return r;
}

PochExpr operator/(const PochExpr& a, const PochExpr& b) { return a * b.inverse(); }

PochExpr PochExpr::scale_z(int t) const {
    PochExpr r(n_);
    for (auto& [m, e] : f_) {
        r.check_index(m + t);
        r.f_[m + t] = e;
    }
    return r;
}

std::string PochExpr::str() const {
    if (f_.empty()) return "1";
    std::ostringstream num, den;
    for (auto& [m, e] : f_) {
        auto& os = (e > 0) ? num : den;
        os << "[" << m << "]";
        if (std::abs(e) > 1) os << "^" << std::abs(e);
    }
    std::string n = num.str(), d = den.str();
    if (n.empty()) n = "1";
    return d.empty() ? n : n + " / " + d;
}

LinearFactorForm reduce(const PochExpr& e) {
    // Push every symbol down its chain m, m+D, m+2D, ... to the largest
    // occurring index; the flow through each chain edge m -> m+D gives the
    // multiplicity of the factor z - (-q)^(-m).  The result does not depend
    // on the pairing order: the flows solve the conservation equations.
    int D = e.period();
    LinearFactorForm out;
    std::map<int, std::map<int, int>> chains;  // residue -> (index -> exponent)
    for (auto& [m, ex] : e.factors()) {
        int r = ((m % D) + D) % D;
        chains[r][m] = ex;
    }
    for (auto& [r, chain] : chains) {
        int total = 0;
        for (auto& [m, ex] : chain) total += ex;
        int last = chain.rbegin()->first;
        if (total != 0) out.residual[last] = total;
        int flow = 0;
        auto it = chain.begin();
        for (int m = chain.begin()->first; m < last; m += D) {
            while (it != chain.end() && it->first <= m) {
                flow += it->second;
                ++it;
            }
            if (flow != 0) out.factors[-m] += flow;
        }
    }
    // drop zero entries
    for (auto it = out.factors.begin(); it != out.factors.end();)
        it = (it->second == 0) ? out.factors.erase(it) : std::next(it);
    return out;
}

bool equiv(const PochExpr& e1, const PochExpr& e2) {
    if (e1.rank() != e2.rank()) throw Error(ErrorKind::InvalidArgument, "rank parameters differ");
    LinearFactorForm f = reduce(e1 / e2);
    return f.is_unit();
}

std::string LinearFactorForm::str() const {
    std::ostringstream os;
    if (factors.empty()) {
        os << "1";
    } else {
        for (auto& [t, m] : factors) {
            os << "(z - (-q)^" << t << ")";
            if (m != 1) os << "^" << m;
        }
    }
    if (!residual.empty()) {
        os << " * residual:";
        for (auto& [m, e] : residual) {
            os << " [" << m << "]";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::InvalidArgument, msg);
}

// numerator and denominator index lists -> product of symbols
PochExpr from_indices(int n, std::initializer_list<int> num, std::initializer_list<int> den) {
    PochExpr e(n);
    for (int m : num) e.mul_symbol(m, 1);
    for (int m : den) e.mul_symbol(m, -1);
    return e;
}

bool spin_node(int k, int n) { return k == n - 1 || k == n; }

}  // namespace

PochExpr a_closed(int k, int l, int n) {
    require(n >= 4, "rank must be >= 4");
    require(k >= 1 && k <= n && l >= 1 && l <= n, "node index out of range");
    bool ks = spin_node(k, n), ls = spin_node(l, n);
    require(!(ks && ls), "no closed form is provided for spin-spin pairs");
    if (ks || ls) {
        int kk = ks ? l : k;
        return from_indices(n, {n - kk - 1, 3 * n + kk - 3}, {n + kk - 1, 3 * n - kk - 3});
    }
    int d = std::abs(k - l);
    return from_indices(n, {d, 2 * n + k + l - 2, 2 * n - k - l - 2, 4 * n - d - 4},
                        {k + l, 2 * n + k - l - 2, 2 * n - k + l - 2, 4 * n - k - l - 4});
}

PochExpr a_recursive(int k, int l, int n) {
    require(n >= 4, "rank must be >= 4");
    require(k >= 1 && k <= n && l >= 1 && l <= n, "node index out of range");
    bool ks = spin_node(k, n), ls = spin_node(l, n);
    require(!(ks && ls), "no recursion is provided for spin-spin pairs");
    if (ks || ls) {
        int kk = ks ? l : k;
        if (kk == 1) return a_closed(k, l, n);  // base case a_{spin,1}
        // a_{n,k}(z) = a_{n,k-1}(-q^{-1} z) a_{n,1}((-q)^{k-1} z)
        return a_recursive(n, kk - 1, n).scale_z(-1) * a_recursive(n, 1, n).scale_z(kk - 1);
    }
    if (k == 1 && l == 1) return a_closed(1, 1, n);
    if (k > l) std::swap(k, l);  // a_{k,l} = a_{l,k}
    if (k == 1) {
        // a_{1,l}(z) = a_{1,l-1}(-q^{-1} z) a_{1,1}((-q)^{l-1} z)
        //              * [l-1][4n+l-7] / ([l-3][4n+l-5])
        PochExpr corr = from_indices(n, {l - 1, 4 * n + l - 7}, {l - 3, 4 * n + l - 5});
        return a_recursive(1, l - 1, n).scale_z(-1) * a_recursive(1, 1, n).scale_z(l - 1) * corr;
    }
    // 2 <= k <= l <= n-2: a_{l,k}(z) = a_{l,k-1}(-q^{-1} z) a_{l,1}((-q)^{k-1} z)
    return a_recursive(l, k - 1, n).scale_z(-1) * a_recursive(l, 1, n).scale_z(k - 1);
}

}  // namespace qar::qpoch
