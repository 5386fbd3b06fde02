#include "denom/denom.hpp"

#include <algorithm>
#include <sstream>

namespace qar::denom {

std::string DenominatorSpec::factored_str() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    for (auto& [s, m] : exps) {
        os << "(z - (-q)^" << s << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::vector<int> DenominatorSpec::exponent_list() const {
    std::vector<int> out;
    for (auto& [s, m] : exps)
        for (int t = 0; t < m; ++t) out.push_back(s);
    return out;
}

DenominatorSpec denom_D(int k, int l, int n) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "type D requires rank >= 4");
    if (k < 1 || k > n || l < 1 || l > n)
        throw Error(ErrorKind::InvalidArgument, "node index out of range");
    DenominatorSpec d;
    d.family = 'D';
    d.rank = n;
    d.k = k;
    d.l = l;
    bool k_spin = (k >= n - 1), l_spin = (l >= n - 1);
    if (!k_spin && !l_spin) {
        for (int s = 1; s <= std::min(k, l); ++s) {
            d.exps[std::abs(k - l) + 2 * s] += 1;
            d.exps[2 * n - k - l - 2 + 2 * s] += 1;
        }
    } else if (k_spin && l_spin) {
        // s runs over 1..n-1 with s = k-l+1 mod 2
        for (int s = 1; s <= n - 1; ++s)
            if (((s - (k - l + 1)) % 2) == 0) d.exps[2 * s] += 1;
    } else {
        int kk = k_spin ? l : k;  // the non-spin node
        for (int s = 1; s <= kk; ++s) d.exps[n - kk - 1 + 2 * s] += 1;
    }
    return d;
}

DenominatorSpec denom_A(int k, int l, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "type A requires rank >= 1");
    if (k < 1 || k > n || l < 1 || l > n)
        throw Error(ErrorKind::InvalidArgument, "node index out of range");
    DenominatorSpec d;
    d.family = 'A';
    d.rank = n;
    d.k = k;
    d.l = l;
    int cap = std::min(std::min(k, l), std::min(n + 1 - k, n + 1 - l));
    for (int s = 1; s <= cap; ++s) d.exps[std::abs(k - l) + 2 * s] += 1;
    return d;
}

DenominatorSpec denominator(char family, int k, int l, int n) {
    switch (family) {
        case 'A':
        case 'a':
            return denom_A(k, l, n);
        case 'D':
        case 'd':
            return denom_D(k, l, n);
        case 'E':
        case 'e':
            throw Error(ErrorKind::Unsupported,
                        "pole data for type E is conjectural and not implemented; "
                        "supported families: A, D");
        default:
            throw Error(ErrorKind::InvalidArgument, "unknown family");
    }
}

std::vector<JVertex> build_J(const rep::RepContext& ctx, const rep::PhiTable& table) {
    std::vector<JVertex> out;
    const RootSystem& rs = ctx.rs();
    for (int t = 1; t <= rs.rank(); ++t) {
        const RepVertex* v = table.phi_inv(rs.simple_root(t), 0);
        if (!v) throw Error(ErrorKind::Internal, "phi window does not cover a simple root");
        out.push_back(JVertex{*v, t});
    }
    std::sort(out.begin(), out.end(), [](const JVertex& a, const JVertex& b) { return a.v < b.v; });
    return out;
}

GammaJ build_gammaJ(CartanType t, const std::vector<JVertex>& J) {
    if (t.family == Family::E)
        throw Error(ErrorKind::Unsupported,
                    "pole data for type E is conjectural and not implemented; "
                    "supported families: A, D");
    GammaJ g{t, J, {}, {}};
    int m = static_cast<int>(J.size());
    g.cartan.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) g.cartan[i][i] = 2;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            DenominatorSpec d = denominator(t.letter(), J[i].v.i, J[j].v.i, t.rank);
            int mult = d.pole_order(J[j].v.p - J[i].v.p);
            if (mult > 0) g.arrows[{i, j}] = mult;
            g.cartan[i][j] -= mult;
            g.cartan[j][i] -= mult;
        }
    }
    return g;
}

KlrParameter klr_parameters(const GammaJ& g, int i, int j) {
    if (i < 0 || j < 0 || i >= static_cast<int>(g.vertices.size()) ||
        j >= static_cast<int>(g.vertices.size()))
        throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    KlrParameter p;
    p.zero = (i == j);
    p.dij = p.zero ? 0 : g.d(i, j);
    p.dji = p.zero ? 0 : g.d(j, i);
    return p;
}

std::string KlrParameter::str() const {
    if (zero) return "0";
    std::string s;
    if (dij > 0) {
        s += "(u-v)";
        if (dij > 1) s += "^" + std::to_string(dij);
    }
    if (dji > 0) {
        s += "(v-u)";
        if (dji > 1) s += "^" + std::to_string(dji);
    }
    return s.empty() ? "1" : s;
}

bool verify_thm42(const rep::RepContext& ctx, const rep::PhiTable& table) {
    const RootSystem& rs = ctx.rs();
    std::vector<JVertex> J = build_J(ctx, table);
    GammaJ g = build_gammaJ(rs.type(), J);
    // vertex s of the reversed quiver corresponds to phi^{-1}(alpha_s, 0)
    std::vector<int> idx_of_alpha(rs.rank() + 1, -1);
    for (size_t i = 0; i < J.size(); ++i) idx_of_alpha[J[i].alpha] = static_cast<int>(i);
    DynkinQuiver rev = ctx.quiver().reversed();
    for (int s = 1; s <= rs.rank(); ++s) {
        for (int t = 1; t <= rs.rank(); ++t) {
            if (s == t) continue;
            int want = rev.has_arrow(s, t) ? 1 : 0;
            if (g.d(idx_of_alpha[s], idx_of_alpha[t]) != want) return false;
            int a_expected = (s == t) ? 2 : (rev.has_arrow(s, t) || rev.has_arrow(t, s)) ? -1 : 0;
            if (g.cartan[idx_of_alpha[s]][idx_of_alpha[t]] != a_expected) return false;
            if (a_expected != rs.cartan(s, t)) return false;  // Q^rev has the same diagram
        }
    }
    return true;
}

bool verify_lemma34(const rep::RepContext& ctx, const rep::PhiTable& table) {
    if (ctx.rs().type().family != Family::D)
        throw Error(ErrorKind::InvalidArgument, "the simple-pole bound check is for type D");
    int n = ctx.rs().rank();
    std::vector<JVertex> J = build_J(ctx, table);
    for (const JVertex& a : J)
        for (const JVertex& b : J) {
            DenominatorSpec d = denom_D(a.v.i, b.v.i, n);
            if (d.pole_order(b.v.p - a.v.p) > 1) return false;
        }
    return true;
}

bool check_double_pole_region(int n) {
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            DenominatorSpec d = denom_D(k, l, n);
            for (int s = -1; s <= 4 * n; ++s) {
                int order = d.pole_order(s);
                if (order > 2) return false;
                bool region = (2 <= k && k <= n - 2) && (2 <= l && l <= n - 2) && (k + l >= n) &&
                              (2 * n - k - l <= s) && (s <= k + l) && ((s - k - l) % 2 == 0);
                if (region != (order == 2)) return false;
            }
        }
    return true;
}

std::string GammaJ::to_dot() const {
    std::ostringstream os;
    os << "digraph GammaJ {\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        os << "  n" << i << " [label=\"(" << vertices[i].v.i << "," << vertices[i].v.p
           << ") alpha_" << vertices[i].alpha << "\"];\n";
    for (auto& [e, mult] : arrows)
        for (int t = 0; t < mult; ++t) os << "  n" << e.first << " -> n" << e.second << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qar::denom
