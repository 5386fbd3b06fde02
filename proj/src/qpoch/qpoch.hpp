#pragma once

#include <map>
#include <string>

#include "algebra/laurent.hpp"

namespace qar::qpoch {

/// Formal product of symbols [m] = ((-q)^m z ; p*^2)_infinity with integer
/// exponents, where p* = q^(2n-2).  Only two rewrite rules are ever applied:
/// the index shift under z -> (-q)^t z and the pairing
/// [m]/[m+4n-4] = z - (-q)^(-m) modulo Laurent units.
class PochExpr {
public:
    explicit PochExpr(int n) : n_(n) {
        if (n < 2) throw Error(ErrorKind::InvalidArgument, "rank parameter must be >= 2");
    }

    static PochExpr symbol(int n, int m) {
        PochExpr e(n);
        e.mul_symbol(m, 1);
        return e;
    }

    int rank() const { return n_; }
    int period() const { return 4 * n_ - 4; }
    const std::map<int, int>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }

    PochExpr& mul_symbol(int m, int e);
    friend PochExpr operator*(const PochExpr& a, const PochExpr& b);
    friend PochExpr operator/(const PochExpr& a, const PochExpr& b);
    PochExpr inverse() const;

    /// substitute z -> (-q)^t z: every index shifts by t
    PochExpr scale_z(int t) const;

    std::string str() const;

private:
    void check_index(int m) const {
        if (std::abs(m) > 8 * n_)
            throw Error(ErrorKind::Internal, "symbol index exceeds the 8n guard");
    }

    int n_;
    std::map<int, int> f_;  // index -> exponent, zero exponents erased
};

/// Result of reducing a PochExpr to linear factors modulo units:
/// prod over factors (z - (-q)^t)^e times a leftover symbol product.
struct LinearFactorForm {
    std::map<int, int> factors;  // t -> signed multiplicity
    std::map<int, int> residual; // unpaired symbols
    bool pure() const { return residual.empty(); }
    bool is_unit() const { return factors.empty() && residual.empty(); }
    std::string str() const;
};

/// Telescoping reduction along the chains m, m+(4n-4), m+2(4n-4), ...
LinearFactorForm reduce(const PochExpr& e);

/// True when e1/e2 is a unit c z^k.
bool equiv(const PochExpr& e1, const PochExpr& e2);

/// Closed forms of the scalars a_{k,l}(z); clauses:
///  - both k,l in 1..n-2
///  - one of them a spin node (n-1 or n)
/// Spin-spin pairs are out of range.
PochExpr a_closed(int k, int l, int n);

/// The same scalars built strictly by the recursions from the two base cases
/// a_{1,1} and a_{spin,1}.
PochExpr a_recursive(int k, int l, int n);

}  // namespace qar::qpoch
