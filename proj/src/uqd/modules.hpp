#pragma once

#include "algebra/sparse.hpp"
#include "cartan/cartan.hpp"

namespace qar::uqd {

using alg::Laurent;
using alg::Rat;
using alg::RatFunc;
using alg::SparseMat;
using alg::ZPoly;
using alg::ZRat;
using cartan::Family;

/// Laurent polynomial in the spectral variable z with coefficients in Q(q):
/// the entry ring of generator matrices of evaluation modules.
struct QZ {
    std::map<int, RatFunc> t;  // z-exponent -> coefficient, zeros erased

    QZ() = default;
    QZ(Laurent c) {
        if (!c.is_zero()) t[0] = RatFunc(std::move(c));
    }
    QZ(RatFunc c) {
        if (!c.is_zero()) t[0] = std::move(c);
    }
    static QZ monomial(RatFunc c, int zexp) {
        QZ r;
        if (!c.is_zero()) r.t[zexp] = std::move(c);
        return r;
    }

    bool is_zero() const { return t.empty(); }
    QZ operator-() const;
    QZ& operator+=(const QZ& o);
    friend QZ operator+(QZ a, const QZ& b) { return a += b; }
    friend QZ operator-(QZ a, const QZ& b) { return a += -b; }
    friend QZ operator*(const QZ& a, const QZ& b);
    QZ& operator*=(const QZ& o) { return *this = *this * o; }
    friend bool operator==(const QZ&, const QZ&) = default;

    Rat eval(const Rat& qv, const Rat& zv) const;
    ZRat to_zrat() const;
    std::string str() const;
};

inline bool fz(const QZ& x) { return x.is_zero(); }

/// Finite-dimensional module over the quantum affine algebra of type
/// A_n^(1) or D_n^(1), given by sparse generator matrices for e_i, f_i
/// (i = 0..n) and the weight data that determines the K_i action.
struct ModuleData {
    Family family = Family::D;
    int n = 0;    // rank of the finite part
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> wt2;  // doubled epsilon-coordinates per basis vector
    std::vector<SparseMat<QZ>> e, f;    // generator matrices, index 0..n
    int extremal = 0;                   // index of the dominant extremal vector

    int ncoords() const { return family == Family::A ? n + 1 : n; }
    /// <h_i, wt(b)> for i = 0..n
    int kexp(int i, int b) const;
    SparseMat<QZ> kmat(int i) const;      // diagonal K_i
    SparseMat<QZ> kmat_inv(int i) const;
    /// (K_i - K_i^{-1}) / (q - q^{-1}) as a diagonal matrix
    SparseMat<QZ> kbalance(int i) const;

    /// 2n-dimensional vector representation (type D) or the (n+1)-dimensional
    /// one (type A).
    static ModuleData vector_rep(Family fam, int n);
    /// spin representations of type D; sign = +1 or -1
    static ModuleData spin_rep(int n, int sign);
};

/// evaluation module: e_0 scaled by (-q)^t, f_0 by (-q)^{-t}
ModuleData evaluate(const ModuleData& m, int neg_q_exp);
/// evaluation module with a symbolic spectral variable: e_0 scaled by z
ModuleData evaluate_symbolic(const ModuleData& m);

/// tensor product via the comultiplication
/// Delta(e_i) = e_i (x) K_i^{-1} + 1 (x) e_i,  Delta(f_i) = f_i (x) 1 + K_i (x) f_i
ModuleData tensor(const ModuleData& a, const ModuleData& b);

ModuleData direct_sum(const ModuleData& a, const ModuleData& b);

/// Exact verification of the defining relations (weight compatibility of
/// every generator entry, the [e_i, f_j] commutator; optionally the Serre
/// relations).  Returns an empty string when everything holds.
std::string check_relations(const ModuleData& m, bool serre);

/// doubled classical weight of alpha_i (i = 0..n); alpha_0 acts by -theta
std::vector<int> alpha_wt2(Family fam, int n, int i);

/// adjacency in the affine Dynkin diagram (for the Serre relations)
int affine_cartan(Family fam, int n, int i, int j);

}  // namespace qar::uqd
