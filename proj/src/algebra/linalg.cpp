#include "algebra/sparse.hpp"

namespace qar::alg {

std::vector<std::vector<RatFunc>> nullspace(const SparseMat<RatFunc>& m) {
    int rows = m.rows(), cols = m.cols();
    // Row scaling leaves the kernel unchanged, so clear denominators first.
    std::vector<std::vector<Laurent>> a(rows, std::vector<Laurent>(cols));
    for (int i = 0; i < rows; ++i) {
        Laurent l(1);
        for (auto& [j, v] : m.row(i)) {
            if (v.den().is_one()) continue;
            Laurent g = gcd(l, v.den());
            l = exact_div(l * v.den(), g);
        }
        for (auto& [j, v] : m.row(i)) a[i][j] = v.num() * exact_div(l, v.den());
    }

    // Bareiss forward pass: every intermediate entry is a minor of the
    // cleared matrix, and the division by the previous pivot is exact.
    std::vector<int> pivot_col;
    Laurent dprev(1);
    int t = 0;
    for (int c = 0; c < cols && t < rows; ++c) {
        int pr = -1;
        for (int r = t; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[t], a[pr]);
        for (int r = t + 1; r < rows; ++r) {
            bool rc_zero = a[r][c].is_zero();
            for (int j = c + 1; j < cols; ++j) {
                Laurent v = a[t][c] * a[r][j];
                if (!rc_zero && !a[t][j].is_zero()) v -= a[r][c] * a[t][j];
                a[r][j] = (dprev.is_one() || v.is_zero()) ? v : exact_div(v, dprev);
            }
            a[r][c] = Laurent();
        }
        dprev = a[t][c];
        pivot_col.push_back(c);
        ++t;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<RatFunc>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<RatFunc> v(cols);
        v[c] = RatFunc(1);
        for (int k = t - 1; k >= 0; --k) {
            int p = pivot_col[k];
            RatFunc s;
            for (int j = p + 1; j <= c; ++j) {
                if (a[k][j].is_zero() || v[j].is_zero()) continue;
                s += RatFunc(a[k][j]) * v[j];
            }
            if (!s.is_zero()) v[p] = -s / RatFunc(a[k][p]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qar::alg
