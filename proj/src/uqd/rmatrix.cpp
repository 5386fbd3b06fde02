#include "uqd/rmatrix.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace qar::uqd {

namespace {

// signed labels for the type D vector basis: j for v_j, -j for v_{bar j};
// basis order v_1..v_n, v_{bar n}..v_{bar 1}
int label_of(int idx, int n) { return idx < n ? idx + 1 : -(2 * n - idx); }
int index_of(int label, int n) { return label > 0 ? label - 1 : 2 * n + label; }

// chain level: v_1 < ... < v_{n-1} < {v_n, v_{bar n}} < v_{bar(n-1)} < ... < v_{bar 1}
int level_of(int label, int n) { return label > 0 ? label : 2 * n + label; }

// index weight in the exchange coefficients: j for v_j, 2n - j for v_{bar j}
int absval(int label, int n) { return label > 0 ? label : 2 * n + label; }

}  // namespace

Intertwiner rnorm11(int n, const ZRat& zval) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "the explicit matrix is for type D, n >= 4");
    int dim = 2 * n;
    const ZRat& z = zval;
    auto C = [](const Laurent& l) { return ZRat(RatFunc(l)); };
    ZRat one = C(Laurent(1));
    ZRat q2 = C(Laurent::q(2));
    ZRat q2n2 = C(Laurent::q(2 * n - 2));
    ZRat dmid = z - q2;
    ZRat dfull = dmid * (z - q2n2);
    ZRat diag_coeff = (one - q2) / dmid;          // (1-q^2)/(z-q^2), times z when k > l
    ZRat swap_coeff = C(Laurent::q(1)) * (z - one) / dmid;  // q(z-1)/(z-q^2)

    // c_{ij}(z); the pair {n, bar n} is incomparable in the crystal order,
    // and the matching convention (validated by the commutation check) takes
    // the barred element as the larger one.
    auto prec = [&](int i, int j) {
        int li = level_of(i, n), lj = level_of(j, n);
        if (li != lj) return li < lj;
        return i > 0 && j < 0;  // v_n before v_{bar n}
    };
    auto cij = [&](int i, int j) -> ZRat {
        if (i == j) return (q2 * z - q2n2) * (z - one);
        ZRat delta = (i == -j) ? (z - q2n2) : ZRat();
        if (prec(i, j)) {
            ZRat qpow = C(Laurent::neg_q_pow(absval(j, n) - absval(i, n)));
            return (one - q2) * z * (qpow * (one - z) + delta);
        }
        ZRat qpow = C(Laurent::neg_q_pow(2 * n - 2 + absval(j, n) - absval(i, n)));
        return (one - q2) * (qpow * (one - z) + delta);
    };

    Intertwiner iw;
    iw.dim_m = iw.dim_n = dim;
    iw.R = SparseMat<ZRat>(dim * dim, dim * dim);
    for (int a = 0; a < dim; ++a) {
        int k = label_of(a, n);
        for (int b = 0; b < dim; ++b) {
            int l = label_of(b, n);
            int col = a * dim + b;
            if (k == l) {
                iw.R.set(col, col, one);
            } else if (l == -k) {
                // exchange block: the coefficient of the output pair with
                // v_j in the second slot is c_{jk}
                for (int c = 0; c < dim; ++c) {
                    int j = label_of(c, n);
                    ZRat coeff = cij(j, k) / dfull;
                    iw.R.add(index_of(-j, n) * dim + c, col, coeff);
                }
            } else {
                ZRat d = prec(l, k) ? diag_coeff * z : diag_coeff;
                iw.R.add(col, col, d);
                iw.R.add(b * dim + a, col, swap_coeff);
            }
        }
    }
    return iw;
}

bool check_intertwiner(const Intertwiner& iw, const ModuleData& m_mod, const ModuleData& n_mod) {
    ModuleData t1 = tensor(m_mod, evaluate_symbolic(n_mod));
    ModuleData t2 = tensor(evaluate_symbolic(n_mod), m_mod);
    // commuting with K_i = preserving weights entrywise
    for (int r = 0; r < iw.R.rows(); ++r)
        for (auto& [c, v] : iw.R.row(r))
            if (t2.wt2[r] != t1.wt2[c]) return false;
    auto conv = [](const SparseMat<QZ>& g) {
        return g.map_entries<ZRat>([](const QZ& v) { return v.to_zrat(); });
    };
    for (int i = 0; i <= m_mod.n; ++i) {
        for (auto pick : {0, 1}) {
            SparseMat<ZRat> g1 = conv(pick ? t1.f[i] : t1.e[i]);
            SparseMat<ZRat> g2 = conv(pick ? t2.f[i] : t2.e[i]);
            if (!((iw.R * g1 - g2 * iw.R).is_zero())) return false;
        }
    }
    return true;
}

ZPoly lcm_denominators(const SparseMat<ZRat>& m) {
    ZPoly acc(1);
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, v] : m.row(r)) acc = lcm(acc, v.den());
    return acc;
}

denom::DenominatorSpec extract_denominator(const Intertwiner& iw, Family fam, int n, int k, int l) {
    ZPoly d = lcm_denominators(iw.R);
    alg::NegQPowFactors f = alg::factor_neg_q_powers(d, 1, 4 * n);
    if (!f.complete)
        throw Error(ErrorKind::Internal,
                    "denominator does not factor over (-q)^s, s in [1, 4n]: convention mismatch");
    denom::DenominatorSpec spec;
    spec.family = fam == Family::A ? 'A' : 'D';
    spec.rank = n;
    spec.k = k;
    spec.l = l;
    spec.exps = f.exps;
    return spec;
}

ZRat subst_q(const ZRat& v, const Rat& qv) {
    auto sub_poly = [&](const ZPoly& p) {
        std::vector<RatFunc> out(p.deg() + 1);
        for (int i = 0; i <= p.deg(); ++i) out[i] = RatFunc(Laurent(p.coeff(i).eval(qv)));
        return ZPoly(std::move(out));
    };
    return ZRat(sub_poly(v.num()), sub_poly(v.den()));
}

SparseMat<RatFunc> rcheck11_at(Family fam, int n, int s2) {
    // d(z) R^norm(z) with z = q^(2 s2); for type A the matrix comes from the
    // solver, for type D from the explicit formula
    Intertwiner iw;
    ZPoly d;
    if (fam == Family::D) {
        iw = rnorm11(n);
        d = ZPoly::z_minus_neg_q_pow(2) * ZPoly::z_minus_neg_q_pow(2 * n - 2);
    } else {
        ModuleData v = ModuleData::vector_rep(Family::A, n);
        iw = solve_intertwiner(v, v);
        d = ZPoly::z_minus_neg_q_pow(2);
    }
    RatFunc zv(Laurent::q(2 * s2));
    SparseMat<RatFunc> out(iw.R.rows(), iw.R.cols());
    for (int r = 0; r < iw.R.rows(); ++r)
        for (auto& [c, v] : iw.R.row(r)) {
            ZPoly q, rem;
            ZPoly num = v.num() * d;
            divrem(num, v.den(), q, rem);
            if (!rem.is_zero())
                throw Error(ErrorKind::Internal, "d(z) does not clear the entry denominator");
            out.set(r, c, q.eval_z(zv));
        }
    return out;
}

// ---------------------------------------------------------------------------
// solve_intertwiner

namespace {

struct Grid {
    // per-block dense matrices of R at one numeric point, block index ->
    // row-major m x m values
    std::vector<std::vector<Rat>> blocks;
    bool ok = false;
};

struct Solver {
    const ModuleData& M;
    const ModuleData& N;
    ModuleData t1, t2;
    int dim;
    int nblocks = 0;
    std::map<std::vector<int>, int> block_of_wt;
    std::vector<std::vector<int>> t1idx, t2idx;        // block -> global indices
    std::vector<int> t1block, t2block, t1local, t2local;
    // spanning tree
    struct Node {
        int parent = -1;
        int gen = -1;  // 0..n: e_gen, n+1..2n+1: f_{gen-n-1}
        int block = -1;
    };
    std::vector<Node> nodes;
    std::vector<std::vector<int>> block_nodes;  // block -> node ids (size = block dim)

    Solver(const ModuleData& m_mod, const ModuleData& n_mod)
        : M(m_mod), N(n_mod), t1(tensor(M, evaluate_symbolic(N))),
          t2(tensor(evaluate_symbolic(N), M)), dim(t1.dim) {
        for (int b = 0; b < dim; ++b) {
            auto it = block_of_wt.find(t1.wt2[b]);
            if (it == block_of_wt.end()) {
                block_of_wt[t1.wt2[b]] = nblocks++;
                t1idx.push_back({});
                t2idx.push_back({});
            }
        }
        t1block.resize(dim);
        t2block.resize(dim);
        t1local.resize(dim);
        t2local.resize(dim);
        for (int b = 0; b < dim; ++b) {
            int blk = block_of_wt.at(t1.wt2[b]);
            t1block[b] = blk;
            t1local[b] = static_cast<int>(t1idx[blk].size());
            t1idx[blk].push_back(b);
            int blk2 = block_of_wt.at(t2.wt2[b]);
            t2block[b] = blk2;
            t2local[b] = static_cast<int>(t2idx[blk2].size());
            t2idx[blk2].push_back(b);
        }
        for (int blk = 0; blk < nblocks; ++blk)
            if (t1idx[blk].size() != t2idx[blk].size())
                throw Error(ErrorKind::Internal, "weight multiplicities differ between the two orders");
        if (t1idx[t1block[t1.extremal]].size() != 1)
            throw Error(ErrorKind::InvalidArgument,
                        "extremal weight space is not one-dimensional; the pair is not admissible");
    }

    int ngens() const { return 2 * (M.n + 1); }

    // numeric generator matrices at one point
    std::vector<SparseMat<Rat>> eval_gens(const ModuleData& t, const Rat& qv, const Rat& zv) const {
        std::vector<SparseMat<Rat>> out;
        for (int g = 0; g < ngens(); ++g) {
            const SparseMat<QZ>& src = g <= M.n ? t.e[g] : t.f[g - M.n - 1];
            out.push_back(src.map_entries<Rat>([&](const QZ& v) { return v.eval(qv, zv); }));
        }
        return out;
    }

    // grow the spanning tree at a probe point; true on success
    bool build_tree(const Rat& qv, const Rat& zv) {
        nodes.clear();
        block_nodes.assign(nblocks, {});
        prepare_probe(qv, zv);
        std::vector<std::optional<alg::RowEchelon<Rat>>> ech(nblocks);
        std::vector<std::vector<Rat>> vecs;  // node -> local coords in its block

        auto add_node = [&](int parent, int gen, int block, std::vector<Rat> local) {
            if (!ech[block]) ech[block].emplace(static_cast<int>(t1idx[block].size()));
            if (!ech[block]->insert(local)) return -1;
            Node nd;
            nd.parent = parent;
            nd.gen = gen;
            nd.block = block;
            nodes.push_back(nd);
            block_nodes[block].push_back(static_cast<int>(nodes.size()) - 1);
            vecs.push_back(std::move(local));
            return static_cast<int>(nodes.size()) - 1;
        };

        int root_block = t1block[t1.extremal];
        std::vector<Rat> seed(t1idx[root_block].size());
        seed[t1local[t1.extremal]] = 1;
        add_node(-1, -1, root_block, std::move(seed));

        std::deque<int> queue{0};
        size_t filled = 1;
        while (!queue.empty() && filled < static_cast<size_t>(dim)) {
            int id = queue.front();
            queue.pop_front();
            int blk = nodes[id].block;
            for (int g = 0; g < ngens(); ++g) {
                // apply generator to the block-supported vector
                std::map<int, std::vector<Rat>> out;  // target block -> coords
                const auto& loc = vecs[id];
                for (size_t jl = 0; jl < loc.size(); ++jl) {
                    if (alg::fz(loc[jl])) continue;
                    int gj = t1idx[blk][jl];
                    // column gj of G[g]: iterate rows sparsely is expensive here,
                    // so generators are stored row-major; use transposed access
                    for (auto& [col, v] : Gt_[g].row(gj)) out_add(out, col, v * loc[jl]);
                }
                for (auto& [tb, coords] : out) {
                    bool nonzero = false;
                    for (auto& x : coords)
                        if (!alg::fz(x)) nonzero = true;
                    if (!nonzero) continue;
                    if (static_cast<int>(block_nodes[tb].size()) ==
                        static_cast<int>(t1idx[tb].size()))
                        continue;  // block already full
                    int nid = add_node(id, g, tb, coords);
                    if (nid >= 0) {
                        ++filled;
                        queue.push_back(nid);
                    }
                }
            }
        }
        return filled == static_cast<size_t>(dim);
    }

    // row-major transposed generator matrices at the probe (global indexing,
    // entries Rat), kept as "column -> (row,value)" adjacency
    std::vector<SparseMat<Rat>> Gt_;
    void prepare_probe(const Rat& qv, const Rat& zv) {
        Gt_.clear();
        auto G = eval_gens(t1, qv, zv);
        for (auto& g : G) {
            SparseMat<Rat> t(g.cols(), g.rows());
            for (int r = 0; r < g.rows(); ++r)
                for (auto& [c, v] : g.row(r)) t.set(c, r, v);
            Gt_.push_back(std::move(t));
        }
    }

    void out_add(std::map<int, std::vector<Rat>>& out, int grow, const Rat& v) const {
        int tb = t1block[grow];
        auto it = out.find(tb);
        if (it == out.end()) it = out.emplace(tb, std::vector<Rat>(t1idx[tb].size())).first;
        it->second[t1local[grow]] += v;
    }

    // evaluate the whole tree at a numeric point and solve every block;
    // returns per-block row-major R values, or nullopt if some block matrix
    // is singular at this point
    std::optional<std::vector<std::vector<Rat>>> solve_at(const Rat& qv, const Rat& zv) const {
        auto G1 = eval_gens(t1, qv, zv);
        auto G2 = eval_gens(t2, qv, zv);
        int nn = static_cast<int>(nodes.size());
        std::vector<std::vector<Rat>> v1(nn), v2(nn);
        v1[0].assign(dim, Rat(0));
        v2[0].assign(dim, Rat(0));
        v1[0][t1.extremal] = 1;
        v2[0][t2.extremal] = 1;
        for (int id = 1; id < nn; ++id) {
            v1[id] = G1[nodes[id].gen].apply(v1[nodes[id].parent]);
            v2[id] = G2[nodes[id].gen].apply(v2[nodes[id].parent]);
        }
        std::vector<std::vector<Rat>> blocks(nblocks);
        for (int blk = 0; blk < nblocks; ++blk) {
            int m = static_cast<int>(t1idx[blk].size());
            // U columns: node vectors in t1-local coords; V columns in t2-local
            std::vector<std::vector<Rat>> U(m, std::vector<Rat>(m)), V(m, std::vector<Rat>(m));
            for (int c = 0; c < m; ++c) {
                int id = block_nodes[blk][c];
                for (int r = 0; r < m; ++r) {
                    U[r][c] = v1[id][t1idx[blk][r]];
                    V[r][c] = v2[id][t2idx[blk][r]];
                }
            }
            // solve R U = V by Gaussian elimination on [U | V] columns:
            // transpose trick: solve U^T X = V^T row-wise
            std::vector<std::vector<Rat>> A(m, std::vector<Rat>(2 * m));
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    A[r][c] = U[c][r];          // U^T
                    A[r][m + c] = V[c][r];      // V^T (right-hand sides: columns of R^T)
                }
            for (int t = 0; t < m; ++t) {
                int pr = -1;
                for (int r = t; r < m; ++r)
                    if (!alg::fz(A[r][t])) {
                        pr = r;
                        break;
                    }
                if (pr < 0) return std::nullopt;
                std::swap(A[t], A[pr]);
                Rat inv = 1 / A[t][t];
                for (int c = t; c < 2 * m; ++c) A[t][c] *= inv;
                for (int r = 0; r < m; ++r) {
                    if (r == t || alg::fz(A[r][t])) continue;
                    Rat f = A[r][t];
                    for (int c = t; c < 2 * m; ++c) A[r][c] -= f * A[t][c];
                }
            }
            // now A = [I | R^T]; R row-major
            std::vector<Rat> rb(m * m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) rb[r * m + c] = A[c][m + r];
            blocks[blk] = std::move(rb);
        }
        return blocks;
    }
};

// polynomial interpolation: Newton form through (xs, ys), returned as dense
// coefficients low..high
std::vector<Rat> newton_poly(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    int n = static_cast<int>(xs.size());
    std::vector<Rat> dd = ys;  // divided differences
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    // expand the Newton form
    std::vector<Rat> coeffs{dd[n - 1]};
    for (int i = n - 2; i >= 0; --i) {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        coeffs.insert(coeffs.begin(), Rat(0));
        for (size_t k = 0; k + 1 < coeffs.size(); ++k) coeffs[k] -= xs[i] * coeffs[k + 1];
        coeffs[0] += dd[i];
    }
    return coeffs;
}

Rat eval_poly(const std::vector<Rat>& c, const Rat& x) {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat pow_rat(const Rat& x, int e) {
    Rat p = 1;
    Rat base = e >= 0 ? x : Rat(Rat(1) / x);
    for (int k = std::abs(e); k > 0; --k) p *= base;
    return p;
}

// Cauchy fit: minimal rational function through the samples, degrees bounded
// by (dnum, dden); returns num/den coefficient vectors with den monic
struct RatFit {
    std::vector<Rat> num, den;
};

std::optional<RatFit> cauchy_fit(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                 int dnum, int dden) {
    int S = static_cast<int>(xs.size());
    int cols = dnum + dden + 2;
    if (S < cols - 1) return std::nullopt;
    std::vector<std::vector<Rat>> A(S, std::vector<Rat>(cols, Rat(0)));
    for (int j = 0; j < S; ++j) {
        Rat xp = 1;
        for (int k = 0; k <= dnum; ++k) {
            A[j][k] = xp;
            xp *= xs[j];
        }
        xp = 1;
        for (int k = 0; k <= dden; ++k) {
            A[j][dnum + 1 + k] = -ys[j] * xp;
            xp *= xs[j];
        }
    }
    auto kernel = alg::nullspace_dense<Rat>(std::move(A), cols);
    for (auto& sol : kernel) {
        std::vector<Rat> num(sol.begin(), sol.begin() + dnum + 1);
        std::vector<Rat> den(sol.begin() + dnum + 1, sol.end());
        while (!den.empty() && alg::fz(den.back())) den.pop_back();
        if (den.empty()) continue;
        while (!num.empty() && alg::fz(num.back())) num.pop_back();
        // validity: den must not vanish at any sample
        bool ok = true;
        for (int j = 0; j < S && ok; ++j) {
            Rat dv = eval_poly(den, xs[j]);
            if (alg::fz(dv))
                ok = false;
            else if (eval_poly(num, xs[j]) != ys[j] * dv)
                ok = false;
        }
        if (!ok) continue;
        Rat lead = den.back();
        for (auto& x : num) x /= lead;
        for (auto& x : den) x /= lead;
        return RatFit{std::move(num), std::move(den)};
    }
    return std::nullopt;
}

// gcd-reduce a rational-coefficient polynomial pair over Q[x]
void reduce_fit(RatFit& f) {
    auto degree = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
    auto rem = [&](std::vector<Rat> a, const std::vector<Rat>& b) {
        while (degree(a) >= degree(b) && !a.empty()) {
            Rat f0 = a.back() / b.back();
            int shift = degree(a) - degree(b);
            for (int k = 0; k <= degree(b); ++k) a[shift + k] -= f0 * b[k];
            while (!a.empty() && alg::fz(a.back())) a.pop_back();
        }
        return a;
    };
    if (f.num.empty()) {
        f.den = {Rat(1)};
        return;
    }
    std::vector<Rat> u = f.num, v = f.den;
    while (!v.empty()) {
        auto r = rem(u, v);
        u = v;
        v = r;
    }
    if (degree(u) > 0) {
        // divide both by u
        auto divexact = [&](const std::vector<Rat>& a) {
            std::vector<Rat> q(a.size() - u.size() + 1, Rat(0));
            std::vector<Rat> r = a;
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
                q[k] = r[k + u.size() - 1] / u.back();
                for (size_t j = 0; j < u.size(); ++j) r[k + j] -= q[k] * u[j];
            }
            return q;
        };
        f.num = divexact(f.num);
        f.den = divexact(f.den);
    }
    Rat lead = f.den.back();
    for (auto& x : f.num) x /= lead;
    for (auto& x : f.den) x /= lead;
}

}  // namespace

Intertwiner solve_intertwiner(const ModuleData& m_mod, const ModuleData& n_mod) {
    Solver sv(m_mod, n_mod);
    const int n = m_mod.n;

    // probe points for the spanning tree
    const std::vector<std::pair<Rat, Rat>> probes = {
        {Rat(7, 3), Rat(17, 6)}, {Rat(11, 4), Rat(19, 7)}, {Rat(13, 5), Rat(23, 9)}};
    bool built = false;
    Rat probe_q, probe_z;
    for (auto& [pq, pz] : probes) {
        if (sv.build_tree(pq, pz)) {
            built = true;
            probe_q = pq;
            probe_z = pz;
            break;
        }
    }
    if (!built)
        throw Error(ErrorKind::InvalidArgument,
                    "no spanning set found: the tensor product is not generically irreducible "
                    "or the probes were degenerate");

    // ---------------- stage A: per-entry denominator structure at probe_q
    int dden_max = 2 * n + 2;
    int dnum_max = dden_max + 2;
    int NZ = dnum_max + dden_max + 4;
    std::vector<Rat> zs;
    {
        int zint = 2;
        while (static_cast<int>(zs.size()) < NZ) {
            Rat zv(zint++);
            if (sv.solve_at(probe_q, zv)) zs.push_back(zv);
            if (zint > 200) throw Error(ErrorKind::Internal, "too many singular sample points");
        }
    }
    std::vector<std::vector<std::vector<Rat>>> valsA(sv.nblocks);  // block -> entry -> samples
    for (int blk = 0; blk < sv.nblocks; ++blk)
        valsA[blk].assign(sv.t1idx[blk].size() * sv.t1idx[blk].size(), std::vector<Rat>(NZ));
    for (int j = 0; j < NZ; ++j) {
        auto sol = sv.solve_at(probe_q, zs[j]);
        if (!sol) throw Error(ErrorKind::Internal, "sample point became singular");
        for (int blk = 0; blk < sv.nblocks; ++blk)
            for (size_t e = 0; e < valsA[blk].size(); ++e) valsA[blk][e][j] = (*sol)[blk][e];
    }

    struct EntryShape {
        bool zero = true;
        std::map<int, int> den_exps;  // s -> multiplicity of (z - (-q)^s)
        int den_zpow = 0;
        int num_deg = 0;
    };
    std::vector<std::vector<EntryShape>> shape(sv.nblocks);
    Rat neg_probe_q = -probe_q;
    int max_num_deg = 0;
    for (int blk = 0; blk < sv.nblocks; ++blk) {
        shape[blk].resize(valsA[blk].size());
        for (size_t e = 0; e < valsA[blk].size(); ++e) {
            auto& w = valsA[blk][e];
            bool allzero = true;
            for (auto& x : w)
                if (!alg::fz(x)) allzero = false;
            if (allzero) continue;
            auto fit = cauchy_fit(zs, w, dnum_max, dden_max);
            if (!fit)
                throw Error(ErrorKind::Internal, "rational reconstruction in z failed at the probe");
            reduce_fit(*fit);
            EntryShape& sh = shape[blk][e];
            sh.zero = false;
            sh.num_deg = static_cast<int>(fit->num.size()) - 1;
            // factor the denominator over z^k and (-q0)^s
            std::vector<Rat> den = fit->den;
            while (!den.empty() && alg::fz(den.front())) {
                den.erase(den.begin());
                sh.den_zpow += 1;
            }
            for (int s = -4 * n; s <= 4 * n && den.size() > 1; ++s) {
                Rat root = pow_rat(neg_probe_q, s);
                while (den.size() > 1 && alg::fz(eval_poly(den, root))) {
                    // synthetic division by (x - root)
                    std::vector<Rat> q(den.size() - 1);
                    Rat carry = 0;
                    for (int k = static_cast<int>(den.size()) - 1; k >= 1; --k) {
                        q[k - 1] = den[k] + carry;
                        carry = q[k - 1] * root;
                    }
                    den = std::move(q);
                    sh.den_exps[s] += 1;
                }
            }
            if (den.size() > 1)
                throw Error(ErrorKind::Internal,
                            "entry denominator does not factor over powers of -q");
            max_num_deg = std::max(max_num_deg, sh.num_deg);
        }
    }

    // ---------------- stage B: numerator coefficients as Laurent polynomials in q
    int A = 3 * n + 8;
    SparseMat<ZRat> R(sv.dim, sv.dim);
    for (int attempt = 0;; ++attempt) {
        int NQ = 2 * A + 3;
        int NZB = max_num_deg + 3;
        std::vector<Rat> qsamples;
        std::vector<std::vector<std::vector<std::vector<Rat>>>> vals;  // t -> block -> entry -> zj
        {
            int t = 0;
            while (static_cast<int>(qsamples.size()) < NQ) {
                Rat qv(2 * t + 5, 2);
                ++t;
                // z samples must be usable for this q
                std::vector<std::vector<std::vector<Rat>>> per_block(sv.nblocks);
                for (int blk = 0; blk < sv.nblocks; ++blk)
                    per_block[blk].assign(valsA[blk].size(), std::vector<Rat>(NZB));
                bool ok = true;
                for (int j = 0; j < NZB && ok; ++j) {
                    auto sol = sv.solve_at(qv, zs[j]);
                    if (!sol) {
                        ok = false;
                        break;
                    }
                    for (int blk = 0; blk < sv.nblocks; ++blk)
                        for (size_t e = 0; e < per_block[blk].size(); ++e)
                            per_block[blk][e][j] = (*sol)[blk][e];
                }
                if (!ok) continue;
                qsamples.push_back(qv);
                vals.push_back(std::move(per_block));
                if (t > NQ + 60) throw Error(ErrorKind::Internal, "too many degenerate q samples");
            }
        }
        bool all_ok = true;
        R = SparseMat<ZRat>(sv.dim, sv.dim);
        for (int blk = 0; blk < sv.nblocks && all_ok; ++blk) {
            int m = static_cast<int>(sv.t1idx[blk].size());
            for (int e = 0; e < m * m && all_ok; ++e) {
                const EntryShape& sh = shape[blk][e];
                if (sh.zero) continue;
                // numerator values: w * den(z; q) at each (q_t, z_j)
                int nd = sh.num_deg;
                std::vector<std::vector<Rat>> coeffs(nd + 1, std::vector<Rat>(qsamples.size()));
                for (size_t t = 0; t < qsamples.size(); ++t) {
                    const Rat& qv = qsamples[t];
                    Rat nq = -qv;
                    std::vector<Rat> numvals(NZB);
                    for (int j = 0; j < NZB; ++j) {
                        Rat den = pow_rat(zs[j], sh.den_zpow);
                        for (auto& [s, mult] : sh.den_exps) {
                            Rat fac = zs[j] - pow_rat(nq, s);
                            for (int u = 0; u < mult; ++u) den *= fac;
                        }
                        numvals[j] = vals[t][blk][e][j] * den;
                    }
                    std::vector<Rat> zpts(zs.begin(), zs.begin() + nd + 1);
                    std::vector<Rat> ypts(numvals.begin(), numvals.begin() + nd + 1);
                    auto poly = newton_poly(zpts, ypts);
                    poly.resize(nd + 1, Rat(0));
                    // verify the spare z samples
                    for (int j = nd + 1; j < NZB; ++j)
                        if (eval_poly(poly, zs[j]) != numvals[j]) {
                            all_ok = false;
                            break;
                        }
                    if (!all_ok) break;
                    for (int k = 0; k <= nd; ++k) coeffs[k][t] = poly[k];
                }
                if (!all_ok) break;
                // interpolate each z-coefficient in q as q^{-A} * poly(q)
                std::vector<RatFunc> num_coeffs(nd + 1);
                for (int k = 0; k <= nd && all_ok; ++k) {
                    std::vector<Rat> xs(qsamples.begin(), qsamples.begin() + 2 * A + 1);
                    std::vector<Rat> ys(2 * A + 1);
                    for (int t = 0; t < 2 * A + 1; ++t)
                        ys[t] = coeffs[k][t] * pow_rat(qsamples[t], A);
                    auto poly = newton_poly(xs, ys);
                    // verify on the spare q samples
                    for (size_t t = 2 * A + 1; t < qsamples.size(); ++t)
                        if (eval_poly(poly, qsamples[t]) !=
                            coeffs[k][t] * pow_rat(qsamples[t], A)) {
                            all_ok = false;
                            break;
                        }
                    if (!all_ok) break;
                    Laurent l;
                    for (size_t d = 0; d < poly.size(); ++d)
                        l += Laurent::monomial(poly[d], static_cast<int>(d) - A);
                    num_coeffs[k] = RatFunc(l);
                }
                if (!all_ok) break;
                // assemble the entry
                ZPoly num(std::move(num_coeffs));
                ZPoly den(1);
                for (auto& [s, mult] : sh.den_exps)
                    for (int t = 0; t < mult; ++t) den *= ZPoly::z_minus_neg_q_pow(s);
                ZRat entry(num, den);
                if (sh.den_zpow > 0) entry = entry / ZRat::z(sh.den_zpow);
                int gr = sv.t2idx[blk][e / m];
                int gc = sv.t1idx[blk][e % m];
                R.set(gr, gc, std::move(entry));
            }
        }
        if (all_ok) break;
        A *= 2;
        if (attempt >= 2)
            throw Error(ErrorKind::Internal, "interpolation bounds exhausted; solver cannot certify");
    }

    Intertwiner iw;
    iw.dim_m = m_mod.dim;
    iw.dim_n = n_mod.dim;
    iw.R = std::move(R);
    if (!check_intertwiner(iw, m_mod, n_mod))
        throw Error(ErrorKind::Internal, "reconstructed matrix fails the symbolic commutation check");
    // normalization: the extremal pair maps to the swapped extremal pair
    ZRat corner = iw.R.at(sv.t2.extremal, sv.t1.extremal);
    if (!corner.is_one())
        throw Error(ErrorKind::Internal, "normalization on the extremal pair failed");
    return iw;
}

bool yang_baxter_numeric(int n, const Rat& qv, const Rat& y, const Rat& w) {
    auto Rat_at = [&](const Rat& zv) {
        Intertwiner iw = rnorm11(n, ZRat(RatFunc(Laurent(zv))));
        return iw.R.map_entries<Rat>([&](const ZRat& v) { return v.eval(qv, 1); });
    };
    // arguments: parameters (1, y, w)
    auto R12 = [&](const SparseMat<Rat>& r, int dim) {
        SparseMat<Rat> out(dim * dim * dim, dim * dim * dim);
        for (int rr = 0; rr < dim * dim; ++rr)
            for (auto& [cc, v] : r.row(rr))
                for (int k = 0; k < dim; ++k) out.set(rr * dim + k, cc * dim + k, v);
        return out;
    };
    auto R23 = [&](const SparseMat<Rat>& r, int dim) {
        SparseMat<Rat> out(dim * dim * dim, dim * dim * dim);
        for (int rr = 0; rr < dim * dim; ++rr)
            for (auto& [cc, v] : r.row(rr))
                for (int k = 0; k < dim; ++k) out.set(k * dim * dim + rr, k * dim * dim + cc, v);
        return out;
    };
    int dim = 2 * n;
    auto lhs = R12(Rat_at(w / y), dim) * R23(Rat_at(w), dim) * R12(Rat_at(y), dim);
    auto rhs = R23(Rat_at(y), dim) * R12(Rat_at(w), dim) * R23(Rat_at(w / y), dim);
    return lhs == rhs;
}

bool yang_baxter_symbolic_z(int n, const Rat& qv) {
    int dim = 2 * n;
    auto subq = [&](Intertwiner iw) {
        return iw.R.map_entries<ZRat>([&](const ZRat& v) { return subst_q(v, qv); });
    };
    SparseMat<ZRat> Rz = subq(rnorm11(n, ZRat::z()));
    SparseMat<ZRat> Rz2 = subq(rnorm11(n, ZRat::z(2)));
    auto emb12 = [&](const SparseMat<ZRat>& r) {
        SparseMat<ZRat> out(dim * dim * dim, dim * dim * dim);
        for (int rr = 0; rr < dim * dim; ++rr)
            for (auto& [cc, v] : r.row(rr))
                for (int k = 0; k < dim; ++k) out.set(rr * dim + k, cc * dim + k, v);
        return out;
    };
    auto emb23 = [&](const SparseMat<ZRat>& r) {
        SparseMat<ZRat> out(dim * dim * dim, dim * dim * dim);
        for (int rr = 0; rr < dim * dim; ++rr)
            for (auto& [cc, v] : r.row(rr))
                for (int k = 0; k < dim; ++k) out.set(k * dim * dim + rr, k * dim * dim + cc, v);
        return out;
    };
    // parameters (1, z, z^2): arguments z, z^2, and z again
    auto lhs = emb12(Rz) * emb23(Rz2) * emb12(Rz);
    auto rhs = emb23(Rz) * emb12(Rz2) * emb23(Rz);
    return lhs == rhs;
}

}  // namespace qar::uqd
