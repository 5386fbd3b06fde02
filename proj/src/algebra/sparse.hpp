#pragma once

#include <functional>
#include <map>
#include <vector>

#include "algebra/zpoly.hpp"

namespace qar::alg {

inline bool fz(const Rat& x) { return sgn(x) == 0; }
inline bool fz(const Laurent& x) { return x.is_zero(); }
inline bool fz(const RatFunc& x) { return x.is_zero(); }
inline bool fz(const ZRat& x) { return x.is_zero(); }

inline Rat finv(const Rat& x) { return Rat(1) / x; }
inline RatFunc finv(const RatFunc& x) { return x.inv(); }
inline ZRat finv(const ZRat& x) { return x.inv(); }

/// Sparse matrix with row-major storage; zero entries are never stored.
template <class F>
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i][i] = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, F v) {
        if (fz(v))
            data_[r].erase(c);
        else
            data_[r][c] = std::move(v);
    }
    void add(int r, int c, const F& v) {
        if (fz(v)) return;
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            data_[r][c] = v;
        } else {
            it->second += v;
            if (fz(it->second)) data_[r].erase(it);
        }
    }
    F at(int r, int c) const {
        auto it = data_[r].find(c);
        return it == data_[r].end() ? F() : it->second;
    }
    const std::map<int, F>& row(int r) const { return data_[r]; }
    size_t nnz() const {
        size_t n = 0;
        for (auto& r : data_) n += r.size();
        return n;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::Internal, "matrix product shape mismatch");
        SparseMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (auto& [k, va] : a.data_[i]) {
                for (auto& [j, vb] : b.data_[k]) r.add(i, j, va * vb);
            }
        }
        return r;
    }
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        SparseMat r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (auto& [j, v] : b.data_[i]) r.add(i, j, v);
        return r;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        SparseMat r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (auto& [j, v] : b.data_[i]) r.add(i, j, -v);
        return r;
    }
    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        std::vector<F> y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (auto& [j, v] : data_[i]) y[i] += v * x[j];
        return y;
    }

    template <class G>
    SparseMat<G> map_entries(const std::function<G(const F&)>& fn) const {
        SparseMat<G> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (auto& [j, v] : data_[i]) r.set(i, j, fn(v));
        return r;
    }

    bool is_zero() const {
        for (auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, F>> data_;
};

/// Incremental row echelon basis over a field; used for rank tracking and
/// span membership.
template <class F>
class RowEchelon {
public:
    explicit RowEchelon(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    /// Reduce v against the current basis (returns the remainder).
    std::vector<F> reduce(std::vector<F> v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const F& c = v[pivots_[k]];
            if (fz(c)) continue;
            F f = c;  // rows are normalized with pivot 1
            for (int j = pivots_[k]; j < cols_; ++j) {
                if (!fz(rows_[k][j])) v[j] -= f * rows_[k][j];
            }
        }
        return v;
    }

    bool contains(std::vector<F> v) const {
        v = reduce(std::move(v));
        for (auto& x : v)
            if (!fz(x)) return false;
        return true;
    }

    /// Insert v; returns true when the rank grew.
    bool insert(std::vector<F> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!fz(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        F il = finv(v[p]);
        for (int j = p; j < cols_; ++j)
            if (!fz(v[j])) v[j] *= il;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> pivots_;
};

/// Kernel basis of a matrix over Q(q).  Rows are first cleared to Laurent
/// polynomials, the forward pass is fraction-free (Bareiss), and only the
/// final back substitution divides.
std::vector<std::vector<RatFunc>> nullspace(const SparseMat<RatFunc>& m);

/// Generic dense kernel over any field (used for small systems).
template <class F>
std::vector<std::vector<F>> nullspace_dense(std::vector<std::vector<F>> a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int t = 0;
    for (int c = 0; c < cols && t < rows; ++c) {
        int pr = -1;
        for (int r = t; r < rows; ++r)
            if (!fz(a[r][c])) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[t], a[pr]);
        F il = finv(a[t][c]);
        for (int j = c; j < cols; ++j)
            if (!fz(a[t][j])) a[t][j] *= il;
        for (int r = 0; r < rows; ++r) {
            if (r == t || fz(a[r][c])) continue;
            F f = a[r][c];
            for (int j = c; j < cols; ++j)
                if (!fz(a[t][j])) a[r][j] -= f * a[t][j];
        }
        pivot_col.push_back(c);
        ++t;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(cols);
        v[c] = F(1);
        for (int k = 0; k < t; ++k) v[pivot_col[k]] = -a[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qar::alg
