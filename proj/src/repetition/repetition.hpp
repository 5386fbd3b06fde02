#pragma once

#include "quiver/quiver.hpp"

namespace qar::rep {

using cartan::Root;
using cartan::RootSystem;
using cartan::WeylWord;
using quiver::DynkinQuiver;
using quiver::HeightFunction;

/// Vertex (i, p) of the repetition quiver; p = xi_i mod 2.
struct RepVertex {
    int i;
    int p;
    friend auto operator<=>(const RepVertex&, const RepVertex&) = default;
};

/// Value of the bijection phi: a positive root together with a shift.
struct PhiValue {
    Root beta;
    int m;
    friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

/// Shared context: quiver, height function, adapted Coxeter element.
class RepContext {
public:
    RepContext(const RootSystem& rs, DynkinQuiver q, HeightFunction xi);

    const RootSystem& rs() const { return *rs_; }
    const DynkinQuiver& quiver() const { return q_; }
    const HeightFunction& xi() const { return xi_; }
    const WeylWord& tau_word() const { return tau_; }
    int coxeter_number() const { return h_; }

    Root tau(const Root& b) const { return rs_->apply_word(tau_, b); }
    Root tau_inv(const Root& b) const;

    /// gamma_i = sum of alpha_j over vertices j with a path j -> i in Q
    Root gamma(int i) const { return gamma_[i - 1]; }
    /// m_i = max{ k >= 0 : tau^k(gamma_i) positive }
    int m(int i) const { return m_[i - 1]; }

    bool in_rep_quiver(int i, int p) const { return ((p - xi_.at(i)) % 2) == 0; }

    /// spectral exponent p + h together with the sign datum o(i) = -(-1)^xi_i
    struct Monomial {
        int exponent;      // power of (-q) attached to (i, p)
        int o;             // +1 or -1
        int drinfeld_sign; // coefficient sign o(i)(-1)^h of the degree-one term
        int dual_coxeter;
    };
    Monomial monomial_evaluation(int i, int p) const;

private:
    const RootSystem* rs_;
    DynkinQuiver q_;
    HeightFunction xi_;
    WeylWord tau_;
    WeylWord tau_inv_;
    int h_;
    std::vector<Root> gamma_;
    std::vector<int> m_;
};

/// The bijection phi on a finite window of p values.
class PhiTable {
public:
    /// The default window [min xi - 2h, max xi + 2h] contains the AR quiver
    /// plus one Coxeter period on each side.
    static PhiTable build(const RepContext& ctx);
    static PhiTable build(const RepContext& ctx, int pmin, int pmax);

    const PhiValue* phi(int i, int p) const;
    const RepVertex* phi_inv(const Root& beta, int m) const;
    int pmin() const { return pmin_; }
    int pmax() const { return pmax_; }
    const std::map<RepVertex, PhiValue>& forward() const { return fwd_; }

    std::string to_json() const;

private:
    int pmin_ = 0, pmax_ = 0;
    std::map<RepVertex, PhiValue> fwd_;
    std::map<std::pair<Root, int>, RepVertex> bwd_;
};

/// The subquiver of the repetition quiver on phi^{-1}(positive roots x {0}).
struct ARQuiver {
    std::vector<RepVertex> vertices;
    std::vector<std::pair<RepVertex, RepVertex>> arrows;
    std::map<RepVertex, Root> dim;  // dimension vectors

    bool has_vertex(const RepVertex& v) const { return dim.count(v) != 0; }
    std::string to_dot() const;
};

ARQuiver ar_quiver(const RepContext& ctx, const PhiTable& table);

/// dim X + dim tau(X) = sum of dim over arrows into X, at every vertex whose
/// tau-shift stays in the AR quiver.
bool check_additivity(const ARQuiver& ar);

/// phi^{-1}(alpha_k, 0) lies in the boundary set, and for non-extremal i
/// only at heights xi_i or xi_i - 2 m_i.
bool boundary_check(const RepContext& ctx, const PhiTable& table);

bool path_exists(const ARQuiver& ar, const RepVertex& from, const RepVertex& to);

/// DOT export of the repetition quiver restricted to a window of p values,
/// with the AR part highlighted.
std::string repetition_window_dot(const RepContext& ctx, const PhiTable& table, int pmin, int pmax);

/// Nakayama identity xi_{i*} - 2 m_{i*} = xi_i - h + 2 for every vertex.
bool check_nakayama(const RepContext& ctx);

/// Membership of (i, xi_j - d(i,j)) and (i, xi_j - 2 m_j + d(i,j)) in the
/// AR vertex set, for all i, j.
bool check_range(const RepContext& ctx, const ARQuiver& ar);

/// Vertex-set description: AR vertices = {(i,p) : xi_i - 2 m_i <= p <= xi_i}.
bool check_vertex_description(const RepContext& ctx, const ARQuiver& ar);

/// Path existence and p_k > p_l for adapted words, over all summing pairs.
bool check_path_order(const RepContext& ctx, const PhiTable& table, const ARQuiver& ar);

/// The injective vertices {(i, xi_i)} span a subquiver isomorphic to the
/// reversed quiver under i -> (i, xi_i).
bool check_injective_subquiver(const RepContext& ctx, const ARQuiver& ar);

}  // namespace qar::rep
