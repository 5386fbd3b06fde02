#pragma once

#include "denom/denom.hpp"
#include "uqd/modules.hpp"

namespace qar::uqd {

/// Normalized R-matrix as an exact matrix over Q(q)(z): maps M (x) N_z to
/// N_z (x) M and fixes the tensor of the dominant extremal vectors.
struct Intertwiner {
    int dim_m = 0, dim_n = 0;
    SparseMat<ZRat> R;  // rows: N_z (x) M basis, cols: M (x) N_z basis
};

/// Explicit normalized R-matrix on vector (x) vector in type D, with the
/// spectral variable set to zval (ZRat::z() gives the symbolic matrix).
Intertwiner rnorm11(int n, const ZRat& zval);
inline Intertwiner rnorm11(int n) { return rnorm11(n, ZRat::z()); }

/// d_{1,1}(z) R^norm(z) on vector (x) vector at z = q^(2s): polynomial
/// entries, used by the fusion construction.  Works for types A and D.
SparseMat<RatFunc> rcheck11_at(Family fam, int n, int s2);

/// Unique intertwiner M (x) N_z -> N_z (x) M (N carries the symbolic z)
/// normalized on the extremal pair.  The result is reconstructed from exact
/// rational samples and then certified by a symbolic commutation check with
/// every Chevalley generator; failures throw.
Intertwiner solve_intertwiner(const ModuleData& m_mod, const ModuleData& n_mod);

/// R Delta(x) = Delta'(x) R for all generators, symbolically in z.
bool check_intertwiner(const Intertwiner& iw, const ModuleData& m_mod, const ModuleData& n_mod);

/// monic-in-z lcm of all entry denominators
ZPoly lcm_denominators(const SparseMat<ZRat>& m);

/// The lcm of the entry denominators with z-power units dropped, factored
/// over the candidate roots z = (-q)^s, 1 <= s <= 4n; an unfactorable
/// remainder throws (convention mismatch).
denom::DenominatorSpec extract_denominator(const Intertwiner& iw, Family fam, int n, int k, int l);

/// substitute a numeric value for q in every coefficient
ZRat subst_q(const ZRat& v, const Rat& qv);

/// Braid relation for the vector representation on V (x) V (x) V:
/// with parameters (1, y, w) both composition orders agree.
bool yang_baxter_numeric(int n, const Rat& qv, const Rat& y, const Rat& w);
/// Same relation with parameters (1, z, z^2), q specialized, z symbolic.
bool yang_baxter_symbolic_z(int n, const Rat& qv);

}  // namespace qar::uqd
