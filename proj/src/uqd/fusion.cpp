#include "uqd/fusion.hpp"

#include <deque>

namespace qar::uqd {

namespace {

// echelon basis that can express members in terms of the inserted vectors
class CoordEchelon {
public:
    explicit CoordEchelon(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<RatFunc>>& rows() const { return rows_; }

    bool insert(std::vector<RatFunc> v) {
        reduce_in_place(v);
        int p = pivot(v);
        if (p < 0) return false;
        RatFunc il = v[p].inv();
        for (auto& x : v)
            if (!x.is_zero()) x *= il;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<RatFunc> v) const {
        reduce_in_place(v);
        return pivot(v) < 0;
    }

    /// coordinates of v in the row basis; throws when v is outside the span
    std::vector<RatFunc> express(std::vector<RatFunc> v) const {
        std::vector<RatFunc> coeff(rows_.size());
        for (size_t k = 0; k < rows_.size(); ++k) {
            const RatFunc& c = v[pivots_[k]];
            if (c.is_zero()) continue;
            coeff[k] = c;
            for (int j = 0; j < cols_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
        }
        if (pivot(v) >= 0) throw Error(ErrorKind::Internal, "vector is outside the span");
        return coeff;
    }

private:
    void reduce_in_place(std::vector<RatFunc>& v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const RatFunc& c = v[pivots_[k]];
            if (c.is_zero()) continue;
            RatFunc f = c;
            for (int j = 0; j < cols_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
        }
    }
    int pivot(const std::vector<RatFunc>& v) const {
        for (int j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) return j;
        return -1;
    }

    int cols_;
    std::vector<std::vector<RatFunc>> rows_;
    std::vector<int> pivots_;
};

SparseMat<RatFunc> embed_step(const SparseMat<RatFunc>& r2, int d0, int k, int pos) {
    // act on tensor positions pos, pos+1 (1-based) of a k-fold product
    int left = 1, right = 1;
    for (int t = 0; t < pos - 1; ++t) left *= d0;
    for (int t = 0; t < k - pos - 1; ++t) right *= d0;
    int dim = left * d0 * d0 * right;
    SparseMat<RatFunc> out(dim, dim);
    for (int rr = 0; rr < d0 * d0; ++rr)
        for (auto& [cc, v] : r2.row(rr))
            for (int p = 0; p < left; ++p)
                for (int s = 0; s < right; ++s)
                    out.set((p * d0 * d0 + rr) * right + s, (p * d0 * d0 + cc) * right + s, v);
    return out;
}

struct WeightBlocks {
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> members;  // block -> global indices
    std::vector<int> block_of, local_of;

    explicit WeightBlocks(const std::vector<std::vector<int>>& wt2) {
        block_of.resize(wt2.size());
        local_of.resize(wt2.size());
        for (size_t b = 0; b < wt2.size(); ++b) {
            auto it = id.find(wt2[b]);
            if (it == id.end()) {
                it = id.emplace(wt2[b], static_cast<int>(members.size())).first;
                members.push_back({});
            }
            block_of[b] = it->second;
            local_of[b] = static_cast<int>(members[it->second].size());
            members[it->second].push_back(static_cast<int>(b));
        }
    }
};

std::vector<RatFunc> restrict_to(const std::vector<int>& idx, const std::vector<RatFunc>& full) {
    std::vector<RatFunc> out(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) out[k] = full[idx[k]];
    return out;
}

SparseMat<RatFunc> fused_T_matrix(Family fam, int k, int n, const Intertwiner* type_a_r) {
    int d0 = fam == Family::A ? n + 1 : 2 * n;
    auto step_at = [&](int s) {
        if (fam == Family::D) return rcheck11_at(Family::D, n, s);
        // type A: clear the denominator of the solved matrix and evaluate
        ZPoly d = ZPoly::z_minus_neg_q_pow(2);
        RatFunc zv(Laurent::q(2 * s));
        SparseMat<RatFunc> out(type_a_r->R.rows(), type_a_r->R.cols());
        for (int r = 0; r < type_a_r->R.rows(); ++r)
            for (auto& [c, v] : type_a_r->R.row(r)) {
                ZPoly q, rem;
                divrem(v.num() * d, v.den(), q, rem);
                if (!rem.is_zero())
                    throw Error(ErrorKind::Internal, "type A denominator mismatch in fusion");
                out.set(r, c, q.eval_z(zv));
            }
        return out;
    };
    int dim = 1;
    for (int t = 0; t < k; ++t) dim *= d0;
    SparseMat<RatFunc> total = SparseMat<RatFunc>::identity(dim);
    for (int bracket = 1; bracket <= k - 1; ++bracket)
        for (int i = bracket; i >= 1; --i) total = embed_step(step_at(i), d0, k, i) * total;
    return total;
}

}  // namespace

FusionResult fusion_T(Family fam, int k, int n) {
    if (k < 2 || (fam == Family::D && k > n - 1) || (fam == Family::A && k > n))
        throw Error(ErrorKind::InvalidArgument, "fusion index out of range");
    int d0 = fam == Family::A ? n + 1 : 2 * n;
    double dims = 1;
    for (int t = 0; t < k; ++t) dims *= d0;
    if (k > 3 || dims > 1024)
        throw Error(ErrorKind::InvalidArgument, "fusion request beyond the desk-scale guard");

    ModuleData V = ModuleData::vector_rep(fam, n);
    Intertwiner iwA;
    if (fam == Family::A) iwA = solve_intertwiner(V, V);
    SparseMat<RatFunc> T = fused_T_matrix(fam, k, n, &iwA);
    int dim = T.rows();

    // codomain module: parameters decrease left to right
    ModuleData codomain = evaluate(V, k - 1);
    for (int t = k - 3; t >= 1 - k; t -= 2) codomain = tensor(codomain, evaluate(V, t));

    WeightBlocks wb(codomain.wt2);
    int nb = static_cast<int>(wb.members.size());

    FusionResult res;
    res.space_dim = dim;

    // kernel per block
    std::vector<std::vector<std::vector<RatFunc>>> kernels(nb);  // block -> basis (local coords)
    for (int blk = 0; blk < nb; ++blk) {
        const auto& mem = wb.members[blk];
        SparseMat<RatFunc> sub(static_cast<int>(mem.size()), static_cast<int>(mem.size()));
        for (size_t r = 0; r < mem.size(); ++r)
            for (auto& [c, v] : T.row(mem[r])) sub.set(static_cast<int>(r), wb.local_of[c], v);
        kernels[blk] = alg::nullspace(sub);
        res.kernel_dim += static_cast<int>(kernels[blk].size());
    }
    res.rank = dim - res.kernel_dim;

    // the one-step degeneration subspace W = image of the explicit matrix at
    // z = (-q)^{-2}
    Intertwiner r_back = fam == Family::D
                             ? rnorm11(n, ZRat(RatFunc(Laurent::neg_q_pow(-2))))
                             : Intertwiner{};
    SparseMat<RatFunc> Wmat(d0 * d0, d0 * d0);
    if (fam == Family::D) {
        Wmat = r_back.R.map_entries<RatFunc>([](const ZRat& v) {
            if (v.den().deg() != 0 || v.num().deg() > 0)
                throw Error(ErrorKind::Internal, "expected constant entries");
            return v.num().coeff(0);
        });
    } else {
        ZRat zv(RatFunc(Laurent::neg_q_pow(-2)));
        Wmat = iwA.R.map_entries<RatFunc>([&](const ZRat& v) {
            return v.num().eval_z(RatFunc(Laurent::neg_q_pow(-2))) /
                   v.den().eval_z(RatFunc(Laurent::neg_q_pow(-2)));
        });
    }
    // basis of W
    std::vector<std::vector<RatFunc>> wbasis;
    {
        CoordEchelon ech(d0 * d0);
        for (int c = 0; c < d0 * d0; ++c) {
            std::vector<RatFunc> col(d0 * d0);
            for (int r = 0; r < d0 * d0; ++r) col[r] = Wmat.at(r, c);
            std::vector<RatFunc> copy = col;
            if (ech.insert(std::move(copy))) wbasis.push_back(std::move(col));
        }
    }

    // right-hand side: sum over j of V^j (x) W (x) V^(k-2-j), blockwise
    std::vector<CoordEchelon> rhs(nb, CoordEchelon(0));
    for (int blk = 0; blk < nb; ++blk) rhs[blk] = CoordEchelon(static_cast<int>(wb.members[blk].size()));
    bool rhs_in_kernel = true;
    int rest = dim / (d0 * d0);
    for (int j = 0; j <= k - 2; ++j) {
        int right = 1;
        for (int t = 0; t < k - 2 - j; ++t) right *= d0;
        int left = rest / right;
        for (const auto& w : wbasis) {
            for (int p = 0; p < left; ++p)
                for (int s = 0; s < right; ++s) {
                    std::vector<RatFunc> v(dim);
                    for (int rr = 0; rr < d0 * d0; ++rr) {
                        if (w[rr].is_zero()) continue;
                        v[(p * d0 * d0 + rr) * right + s] = w[rr];
                    }
                    // membership in the kernel: T v = 0
                    std::vector<RatFunc> tv = T.apply(v);
                    for (auto& x : tv)
                        if (!x.is_zero()) rhs_in_kernel = false;
                    int blk = -1;
                    for (int b = 0; b < dim; ++b)
                        if (!v[b].is_zero()) {
                            blk = wb.block_of[b];
                            break;
                        }
                    if (blk < 0) continue;
                    rhs[blk].insert(restrict_to(wb.members[blk], v));
                }
        }
    }
    int rhs_dim = 0;
    bool kernel_inside_rhs = true;
    for (int blk = 0; blk < nb; ++blk) {
        rhs_dim += rhs[blk].rank();
        for (const auto& kv : kernels[blk])
            if (!rhs[blk].contains(kv)) kernel_inside_rhs = false;
    }
    res.kernel_matches = rhs_in_kernel && kernel_inside_rhs && (rhs_dim == res.kernel_dim);

    // image, blockwise
    std::vector<CoordEchelon> image(nb, CoordEchelon(0));
    for (int blk = 0; blk < nb; ++blk) image[blk] = CoordEchelon(static_cast<int>(wb.members[blk].size()));
    for (int c = 0; c < dim; ++c) {
        std::vector<RatFunc> col(dim);
        bool nz = false;
        for (int r = 0; r < dim; ++r) {
            col[r] = T.at(r, c);
            if (!col[r].is_zero()) nz = true;
        }
        if (!nz) continue;
        int blk = wb.block_of[c];  // T preserves weights
        image[blk].insert(restrict_to(wb.members[blk], col));
    }
    int image_rank = 0;
    for (int blk = 0; blk < nb; ++blk) image_rank += image[blk].rank();
    if (image_rank != res.rank) throw Error(ErrorKind::Internal, "rank bookkeeping failed");

    // fused dominant weight: 2(e_1 + ... + e_k)
    std::vector<int> top(codomain.ncoords(), 0);
    for (int t = 0; t < k && t < codomain.ncoords(); ++t) top[t] = 2;
    auto top_it = wb.id.find(top);
    if (top_it == wb.id.end()) {
        res.top_weight_dim = 0;
        res.image_cyclic = false;
        return res;
    }
    int top_blk = top_it->second;
    res.top_weight_dim = image[top_blk].rank();
    if (res.top_weight_dim != 1) {
        res.image_cyclic = false;
        return res;
    }

    // generate from the top weight vector under the codomain action
    std::vector<CoordEchelon> span(nb, CoordEchelon(0));
    for (int blk = 0; blk < nb; ++blk) span[blk] = CoordEchelon(static_cast<int>(wb.members[blk].size()));
    std::deque<std::vector<RatFunc>> work;
    {
        std::vector<RatFunc> seed(dim);
        const auto& row = image[top_blk].rows()[0];
        for (size_t t = 0; t < wb.members[top_blk].size(); ++t) seed[wb.members[top_blk][t]] = row[t];
        span[top_blk].insert(row);
        work.push_back(std::move(seed));
    }
    auto conv = [](const SparseMat<QZ>& g) {
        return g.map_entries<RatFunc>([](const QZ& v) {
            ZRat zr = v.to_zrat();
            if (zr.den().deg() != 0 || zr.num().deg() > 0)
                throw Error(ErrorKind::Internal, "expected constant entries in the fused module");
            return zr.num().coeff(0);
        });
    };
    std::vector<SparseMat<RatFunc>> gens;
    for (int i = 0; i <= n; ++i) {
        gens.push_back(conv(codomain.e[i]));
        gens.push_back(conv(codomain.f[i]));
    }
    bool contained = true;
    while (!work.empty()) {
        std::vector<RatFunc> v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            std::vector<RatFunc> gv = g.apply(v);
            int blk = -1;
            for (int b = 0; b < dim; ++b)
                if (!gv[b].is_zero()) {
                    blk = wb.block_of[b];
                    break;
                }
            if (blk < 0) continue;
            std::vector<RatFunc> local = restrict_to(wb.members[blk], gv);
            if (!image[blk].contains(local)) contained = false;
            if (span[blk].insert(std::move(local))) work.push_back(std::move(gv));
        }
    }
    int span_rank = 0;
    for (int blk = 0; blk < nb; ++blk) span_rank += span[blk].rank();
    res.image_cyclic = contained && (span_rank == res.rank);
    return res;
}

ModuleData fused_fundamental_A(int k, int n) {
    if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "fundamental index out of range");
    ModuleData V = ModuleData::vector_rep(Family::A, n);
    if (k == 1) return V;
    Intertwiner iwA = solve_intertwiner(V, V);
    SparseMat<RatFunc> T = fused_T_matrix(Family::A, k, n, &iwA);
    int dim = T.rows();

    ModuleData codomain = evaluate(V, k - 1);
    for (int t = k - 3; t >= 1 - k; t -= 2) codomain = tensor(codomain, evaluate(V, t));
    WeightBlocks wb(codomain.wt2);
    int nb = static_cast<int>(wb.members.size());

    // image basis, blockwise; keep the global vectors
    std::vector<CoordEchelon> image(nb, CoordEchelon(0));
    for (int blk = 0; blk < nb; ++blk) image[blk] = CoordEchelon(static_cast<int>(wb.members[blk].size()));
    std::vector<std::vector<RatFunc>> basis;     // global coords
    std::vector<int> basis_block;
    for (int c = 0; c < dim; ++c) {
        std::vector<RatFunc> col(dim);
        bool nz = false;
        for (int r = 0; r < dim; ++r) {
            col[r] = T.at(r, c);
            if (!col[r].is_zero()) nz = true;
        }
        if (!nz) continue;
        int blk = wb.block_of[c];
        if (image[blk].insert(restrict_to(wb.members[blk], col))) {
            basis.push_back(std::move(col));
            basis_block.push_back(blk);
        }
    }
    int rank = static_cast<int>(basis.size());

    std::vector<std::vector<int>> block_members(nb);  // block -> basis ids
    std::vector<std::vector<std::vector<RatFunc>>> raw(nb);  // unreduced basis vectors, local coords
    for (int id = 0; id < rank; ++id) {
        int blk = basis_block[id];
        raw[blk].push_back(restrict_to(wb.members[blk], basis[id]));
        block_members[blk].push_back(id);
    }

    ModuleData m;
    m.family = Family::A;
    m.n = n;
    m.dim = rank;
    m.e.assign(n + 1, SparseMat<QZ>(rank, rank));
    m.f.assign(n + 1, SparseMat<QZ>(rank, rank));
    for (int id = 0; id < rank; ++id) {
        m.labels.push_back("w" + std::to_string(id));
        m.wt2.push_back(codomain.wt2[wb.members[basis_block[id]][0]]);
    }

    // solve for coordinates: per block Gaussian elimination on [raw | target]
    auto express_in_block = [&](int blk, std::vector<RatFunc> target) {
        const auto& cols = raw[blk];
        int mrows = static_cast<int>(target.size());
        int mcols = static_cast<int>(cols.size());
        std::vector<std::vector<RatFunc>> A(mrows, std::vector<RatFunc>(mcols + 1));
        for (int r = 0; r < mrows; ++r) {
            for (int c = 0; c < mcols; ++c) A[r][c] = cols[c][r];
            A[r][mcols] = target[r];
        }
        std::vector<int> pivot_of_col(mcols, -1);
        int t = 0;
        for (int c = 0; c < mcols && t < mrows; ++c) {
            int pr = -1;
            for (int r = t; r < mrows; ++r)
                if (!A[r][c].is_zero()) {
                    pr = r;
                    break;
                }
            if (pr < 0) throw Error(ErrorKind::Internal, "image basis degenerated");
            std::swap(A[t], A[pr]);
            RatFunc il = A[t][c].inv();
            for (int j = c; j <= mcols; ++j)
                if (!A[t][j].is_zero()) A[t][j] *= il;
            for (int r = 0; r < mrows; ++r) {
                if (r == t || A[r][c].is_zero()) continue;
                RatFunc f0 = A[r][c];
                for (int j = c; j <= mcols; ++j)
                    if (!A[t][j].is_zero()) A[r][j] -= f0 * A[t][j];
            }
            pivot_of_col[c] = t;
            ++t;
        }
        for (int r = t; r < mrows; ++r)
            if (!A[r][mcols].is_zero())
                throw Error(ErrorKind::Internal, "generator leaves the image");
        std::vector<RatFunc> out(mcols);
        for (int c = 0; c < mcols; ++c)
            if (pivot_of_col[c] >= 0) out[c] = A[pivot_of_col[c]][mcols];
        return out;
    };

    auto conv = [](const SparseMat<QZ>& g) {
        return g.map_entries<RatFunc>([](const QZ& v) {
            ZRat zr = v.to_zrat();
            if (zr.den().deg() != 0 || zr.num().deg() > 0)
                throw Error(ErrorKind::Internal, "unexpected spectral dependence");
            return zr.num().coeff(0);
        });
    };
    for (int i = 0; i <= n; ++i) {
        SparseMat<RatFunc> ge = conv(codomain.e[i]);
        SparseMat<RatFunc> gf = conv(codomain.f[i]);
        for (int id = 0; id < rank; ++id) {
            for (auto [mat, tgt] : {std::pair(&ge, &m.e[i]), std::pair(&gf, &m.f[i])}) {
                std::vector<RatFunc> gv = mat->apply(basis[id]);
                int blk = -1;
                for (int b = 0; b < dim; ++b)
                    if (!gv[b].is_zero()) {
                        blk = wb.block_of[b];
                        break;
                    }
                if (blk < 0) continue;
                std::vector<RatFunc> coords = express_in_block(blk, restrict_to(wb.members[blk], gv));
                for (size_t c = 0; c < coords.size(); ++c) {
                    if (coords[c].is_zero()) continue;
                    tgt->set(block_members[blk][c], id, QZ(coords[c]));
                }
            }
        }
    }
    std::vector<int> topw(n + 1, 0);
    for (int t = 0; t < k; ++t) topw[t] = 2;
    m.extremal = -1;
    for (int id = 0; id < rank; ++id)
        if (m.wt2[id] == topw) m.extremal = id;
    if (m.extremal < 0) throw Error(ErrorKind::Internal, "fused module misses its dominant weight");
    return m;
}

}  // namespace qar::uqd
