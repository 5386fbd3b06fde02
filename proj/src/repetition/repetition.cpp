#include "repetition/repetition.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qar::rep {

RepContext::RepContext(const RootSystem& rs, DynkinQuiver q, HeightFunction xi)
    : rs_(&rs), q_(std::move(q)), xi_(std::move(xi)) {
    if (rs.type() != q_.type) throw Error(ErrorKind::InvalidArgument, "type mismatch");
    tau_ = quiver::adapted_coxeter(q_);
    tau_inv_ = WeylWord(tau_.rbegin(), tau_.rend());
    h_ = rs.coxeter_number();

    int n = rs.rank();
    gamma_.resize(n);
    for (int i = 1; i <= n; ++i) {
        // reverse reachability: vertices with a path into i
        std::set<int> reach{i};
        std::deque<int> work{i};
        while (!work.empty()) {
            int v = work.front();
            work.pop_front();
            for (auto& [s, t] : q_.arrows)
                if (t == v && reach.insert(s).second) work.push_back(s);
        }
        Root g(n, 0);
        for (int v : reach) g[v - 1] = 1;
        gamma_[i - 1] = g;
    }
    m_.resize(n);
    for (int i = 1; i <= n; ++i) {
        int k = 0;
        Root b = gamma_[i - 1];
        for (;;) {
            b = tau(b);
            if (!rs.is_positive_root(b)) break;
            ++k;
        }
        m_[i - 1] = k;
    }
}

Root RepContext::tau_inv(const Root& b) const { return rs_->apply_word(tau_inv_, b); }

RepContext::Monomial RepContext::monomial_evaluation(int i, int p) const {
    if (i < 1 || i > rs_->rank() || !in_rep_quiver(i, p))
        throw Error(ErrorKind::InvalidArgument, "(i,p) violates the height parity");
    Monomial m;
    m.exponent = p + h_;
    m.o = (xi_.at(i) % 2 == 0) ? -1 : 1;  // -(-1)^xi_i
    m.dual_coxeter = h_;                  // simply laced
    m.drinfeld_sign = (h_ % 2 == 0) ? m.o : -m.o;
    return m;
}

PhiTable PhiTable::build(const RepContext& ctx) {
    int lo = INT_MAX, hi = INT_MIN;
    for (int v = 1; v <= ctx.rs().rank(); ++v) {
        lo = std::min(lo, ctx.xi().at(v));
        hi = std::max(hi, ctx.xi().at(v));
    }
    int h = ctx.coxeter_number();
    return build(ctx, lo - 2 * h, hi + 2 * h);
}

PhiTable PhiTable::build(const RepContext& ctx, int pmin, int pmax) {
    PhiTable t;
    t.pmin_ = pmin;
    t.pmax_ = pmax;
    const RootSystem& rs = ctx.rs();
    for (int i = 1; i <= rs.rank(); ++i) {
        int xi = ctx.xi().at(i);
        // seed phi(i, xi_i) = (gamma_i, 0), then walk the tau clauses both ways
        Root beta = ctx.gamma(i);
        int m = 0;
        for (int p = xi; p >= pmin; p -= 2) {
            if (p <= pmax) {
                t.fwd_[{i, p}] = PhiValue{beta, m};
                t.bwd_[{beta, m}] = RepVertex{i, p};
            }
            Root nb = ctx.tau(beta);
            if (rs.is_positive_root(nb)) {
                beta = nb;
            } else {
                beta = cartan::negated(nb);
                m -= 1;
            }
        }
        beta = ctx.gamma(i);
        m = 0;
        for (int p = xi; p <= pmax; p += 2) {
            if (p != xi) {  // the seed was already written
                if (p >= pmin) {
                    t.fwd_[{i, p}] = PhiValue{beta, m};
                    t.bwd_[{beta, m}] = RepVertex{i, p};
                }
            }
            Root nb = ctx.tau_inv(beta);
            if (rs.is_positive_root(nb)) {
                beta = nb;
            } else {
                beta = cartan::negated(nb);
                m += 1;
            }
        }
    }
    return t;
}

const PhiValue* PhiTable::phi(int i, int p) const {
    auto it = fwd_.find({i, p});
    return it == fwd_.end() ? nullptr : &it->second;
}

const RepVertex* PhiTable::phi_inv(const Root& beta, int m) const {
    auto it = bwd_.find({beta, m});
    return it == bwd_.end() ? nullptr : &it->second;
}

std::string PhiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [v, val] : fwd_) {
        nlohmann::json e;
        e["i"] = v.i;
        e["p"] = v.p;
        e["beta"] = val.beta;
        e["m"] = val.m;
        arr.push_back(e);
    }
    return arr.dump();
}

ARQuiver ar_quiver(const RepContext& ctx, const PhiTable& table) {
    ARQuiver ar;
    for (auto& [v, val] : table.forward()) {
        if (val.m != 0) continue;
        ar.vertices.push_back(v);
        ar.dim[v] = val.beta;
    }
    for (const RepVertex& v : ar.vertices) {
        // repetition-quiver arrows (i,p) -> (j,p+1) for every Dynkin edge {i,j}
        for (auto& [a, b] : ctx.rs().edges()) {
            int j = (a == v.i) ? b : (b == v.i) ? a : 0;
            if (!j) continue;
            RepVertex w{j, v.p + 1};
            if (ar.has_vertex(w)) ar.arrows.push_back({v, w});
        }
    }
    std::sort(ar.arrows.begin(), ar.arrows.end());
    ar.arrows.erase(std::unique(ar.arrows.begin(), ar.arrows.end()), ar.arrows.end());
    return ar;
}

bool check_additivity(const ARQuiver& ar) {
    for (const RepVertex& v : ar.vertices) {
        RepVertex tv{v.i, v.p - 2};
        if (!ar.has_vertex(tv)) continue;
        Root sum = ar.dim.at(v);
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += ar.dim.at(tv)[k];
        Root rhs(sum.size(), 0);
        for (auto& [a, b] : ar.arrows) {
            if (b == v) {
                const Root& d = ar.dim.at(a);
                for (size_t k = 0; k < rhs.size(); ++k) rhs[k] += d[k];
            }
        }
        if (sum != rhs) return false;
    }
    return true;
}

bool boundary_check(const RepContext& ctx, const PhiTable& table) {
    const RootSystem& rs = ctx.rs();
    for (int k = 1; k <= rs.rank(); ++k) {
        const RepVertex* v = table.phi_inv(rs.simple_root(k), 0);
        if (!v) return false;
        int i = v->i, p = v->p;
        bool top = (p == ctx.xi().at(i));
        bool bottom = (p == ctx.xi().at(i) - 2 * ctx.m(i));
        bool extremal_column = false;
        if (rs.extremal_vertex(i)) {
            int s2 = ctx.xi().at(i) - p;
            extremal_column = (s2 >= 0) && (s2 % 2 == 0) && (s2 / 2 <= ctx.m(i));
        }
        if (!(top || bottom || extremal_column)) return false;
        if (!rs.extremal_vertex(i) && !(top || bottom)) return false;
    }
    return true;
}

bool path_exists(const ARQuiver& ar, const RepVertex& from, const RepVertex& to) {
    if (!ar.has_vertex(from) || !ar.has_vertex(to))
        throw Error(ErrorKind::InvalidArgument, "vertex not in the AR quiver");
    std::set<RepVertex> seen{from};
    std::deque<RepVertex> work{from};
    while (!work.empty()) {
        RepVertex v = work.front();
        work.pop_front();
        if (v == to) return true;
        for (auto& [a, b] : ar.arrows)
            if (a == v && seen.insert(b).second) work.push_back(b);
    }
    return false;
}

bool check_nakayama(const RepContext& ctx) {
    const RootSystem& rs = ctx.rs();
    int h = ctx.coxeter_number();
    for (int i = 1; i <= rs.rank(); ++i) {
        int is = rs.star(i);
        if (ctx.xi().at(is) - 2 * ctx.m(is) != ctx.xi().at(i) - h + 2) return false;
    }
    return true;
}

bool check_range(const RepContext& ctx, const ARQuiver& ar) {
    const RootSystem& rs = ctx.rs();
    for (int i = 1; i <= rs.rank(); ++i)
        for (int j = 1; j <= rs.rank(); ++j) {
            int d = rs.distance(i, j);
            if (!ar.has_vertex({i, ctx.xi().at(j) - d})) return false;
            if (!ar.has_vertex({i, ctx.xi().at(j) - 2 * ctx.m(j) + d})) return false;
        }
    return true;
}

bool check_vertex_description(const RepContext& ctx, const ARQuiver& ar) {
    const RootSystem& rs = ctx.rs();
    std::set<RepVertex> expect;
    for (int i = 1; i <= rs.rank(); ++i) {
        int xi = ctx.xi().at(i);
        for (int p = xi - 2 * ctx.m(i); p <= xi; p += 2) expect.insert({i, p});
    }
    std::set<RepVertex> got(ar.vertices.begin(), ar.vertices.end());
    return got == expect && static_cast<int>(got.size()) == rs.num_positive();
}

bool check_path_order(const RepContext& ctx, const PhiTable& table, const ARQuiver& ar) {
    const RootSystem& rs = ctx.rs();
    quiver::BetaSequence bs = quiver::adapted_w0(rs, ctx.quiver());
    int r = static_cast<int>(bs.betas.size());
    for (int k = 0; k < r; ++k)
        for (int l = k + 1; l < r; ++l) {
            Root sum = bs.betas[k];
            for (int t = 0; t < rs.rank(); ++t) sum[t] += bs.betas[l][t];
            if (!rs.is_positive_root(sum)) continue;
            const RepVertex* vk = table.phi_inv(bs.betas[k], 0);
            const RepVertex* vl = table.phi_inv(bs.betas[l], 0);
            if (!vk || !vl) return false;
            if (!path_exists(ar, *vl, *vk)) return false;
            if (!(vk->p > vl->p)) return false;
        }
    return true;
}

bool check_injective_subquiver(const RepContext& ctx, const ARQuiver& ar) {
    const DynkinQuiver rev = ctx.quiver().reversed();
    for (int i = 1; i <= ctx.rs().rank(); ++i) {
        RepVertex vi{i, ctx.xi().at(i)};
        if (!ar.has_vertex(vi)) return false;
        for (int j = 1; j <= ctx.rs().rank(); ++j) {
            if (i == j) continue;
            RepVertex vj{j, ctx.xi().at(j)};
            bool arrow = std::find(ar.arrows.begin(), ar.arrows.end(),
                                   std::make_pair(vi, vj)) != ar.arrows.end();
            if (arrow != rev.has_arrow(i, j)) return false;
        }
    }
    return true;
}

std::string repetition_window_dot(const RepContext& ctx, const PhiTable& table, int pmin, int pmax) {
    ARQuiver ar = ar_quiver(ctx, table);
    std::ostringstream os;
    os << "digraph Qhat {\n  rankdir=LR;\n";
    for (int i = 1; i <= ctx.rs().rank(); ++i)
        for (int p = pmin; p <= pmax; ++p) {
            if (!ctx.in_rep_quiver(i, p)) continue;
            const PhiValue* v = table.phi(i, p);
            os << "  \"" << i << "," << p << "\" [label=\"(" << i << "," << p << ")";
            if (v) {
                os << " (";
                for (size_t k = 0; k < v->beta.size(); ++k) os << (k ? "," : "") << v->beta[k];
                os << ";" << v->m << ")";
            }
            os << "\"";
            if (ar.has_vertex({i, p})) os << " style=bold";
            os << "];\n";
        }
    for (int i = 1; i <= ctx.rs().rank(); ++i)
        for (int p = pmin; p <= pmax; ++p) {
            if (!ctx.in_rep_quiver(i, p)) continue;
            for (auto& [a, b] : ctx.rs().edges()) {
                int j = (a == i) ? b : (b == i) ? a : 0;
                if (!j || p + 1 > pmax) continue;
                os << "  \"" << i << "," << p << "\" -> \"" << j << "," << p + 1 << "\";\n";
            }
        }
    os << "}\n";
    return os.str();
}

std::string ARQuiver::to_dot() const {
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=BT;\n";
    for (const RepVertex& v : vertices) {
        os << "  \"" << v.i << "," << v.p << "\" [label=\"(" << v.i << "," << v.p << ") dim=";
        const Root& d = dim.at(v);
        for (size_t k = 0; k < d.size(); ++k) os << d[k];
        os << "\"];\n";
    }
    for (auto& [a, b] : arrows)
        os << "  \"" << a.i << "," << a.p << "\" -> \"" << b.i << "," << b.p << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qar::rep
