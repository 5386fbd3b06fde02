#pragma once

#include "repetition/repetition.hpp"

namespace qar::denom {

using cartan::CartanType;
using cartan::Family;
using cartan::Root;
using cartan::RootSystem;
using quiver::DynkinQuiver;
using quiver::HeightFunction;
using rep::RepVertex;

/// Denominator of a normalized R-matrix, stored as the multiset of
/// exponents s with d(z) = prod (z - (-q)^s).
struct DenominatorSpec {
    char family = 'D';
    int rank = 0;
    int k = 0, l = 0;
    std::map<int, int> exps;  // exponent -> multiplicity

    int degree() const {
        int d = 0;
        for (auto& [s, m] : exps) d += m;
        return d;
    }
    /// multiplicity of m in the exponent multiset; 0 for m <= 0
    int pole_order(int m) const {
        if (m <= 0) return 0;
        auto it = exps.find(m);
        return it == exps.end() ? 0 : it->second;
    }
    std::string factored_str() const;
    std::vector<int> exponent_list() const;  // with multiplicity, sorted
};

/// Type D denominators d_{k,l}(z) between fundamental representations,
/// 1 <= k,l <= n (the two spin nodes are n-1 and n).
DenominatorSpec denom_D(int k, int l, int n);

/// Type A denominators: {|k-l|+2s : 1 <= s <= min(k,l,n+1-k,n+1-l)},
/// all simple.
DenominatorSpec denom_A(int k, int l, int n);

DenominatorSpec denominator(char family, int k, int l, int n);

/// A J-datum vertex: (i, p) with its simple root, spectral exponent p+h and
/// the fundamental-representation index i.
struct JVertex {
    RepVertex v;
    int alpha;  // phi(v) = (alpha_{alpha}, 0)
};

std::vector<JVertex> build_J(const rep::RepContext& ctx, const rep::PhiTable& table);

/// Quiver built from pole orders of the denominators between the members
/// of J, together with its symmetric Cartan matrix.
struct GammaJ {
    CartanType type;
    std::vector<JVertex> vertices;
    std::map<std::pair<int, int>, int> arrows;  // (from idx, to idx) -> multiplicity
    std::vector<std::vector<int>> cartan;       // a_ij over vertex indices

    int d(int i, int j) const {
        auto it = arrows.find({i, j});
        return it == arrows.end() ? 0 : it->second;
    }
    std::string to_dot() const;
};

GammaJ build_gammaJ(CartanType t, const std::vector<JVertex>& J);

/// Quiver-Hecke parameter data attached to a pair of Gamma^J vertices:
/// Q_ij(u,v) = (u-v)^{d_ij} (v-u)^{d_ji} for i != j, and 0 for i = j.
struct KlrParameter {
    bool zero;  // i == j
    int dij, dji;
    std::string str() const;
};

KlrParameter klr_parameters(const GammaJ& g, int i, int j);

/// The map s -> phi^{-1}(alpha_s, 0) is a quiver isomorphism from the
/// reversed quiver onto Gamma^J, and the Cartan matrix of Gamma^J is the
/// one of the underlying Dynkin type.
bool verify_thm42(const rep::RepContext& ctx, const rep::PhiTable& table);

/// Pole orders between members of J are at most 1 (type D).
bool verify_lemma34(const rep::RepContext& ctx, const rep::PhiTable& table);

/// The double-pole region: pole order 2 exactly when 2 <= k,l <= n-2,
/// k+l >= n, 2n-k-l <= s <= k+l and s = k+l mod 2; at most 1 elsewhere.
bool check_double_pole_region(int n);

}  // namespace qar::denom
