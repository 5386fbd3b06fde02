#include "uqd/modules.hpp"

#include <sstream>

namespace qar::uqd {

QZ QZ::operator-() const {
    QZ r = *this;
    for (auto& [e, c] : r.t) c = -c;
    return r;
}

QZ& QZ::operator+=(const QZ& o) {
    for (auto& [e, c] : o.t) {
        auto it = t.find(e);
        if (it == t.end()) {
            t[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return *this;
}

QZ operator*(const QZ& a, const QZ& b) {
    QZ r;
    for (auto& [ea, ca] : a.t)
        for (auto& [eb, cb] : b.t) {
            RatFunc c = ca * cb;
            if (c.is_zero()) continue;
            auto it = r.t.find(ea + eb);
            if (it == r.t.end()) {
                r.t[ea + eb] = std::move(c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
    return r;
}

Rat QZ::eval(const Rat& qv, const Rat& zv) const {
    Rat acc = 0;
    for (auto& [e, c] : t) {
        Rat zp = 1;
        Rat base = e >= 0 ? zv : Rat(Rat(1) / zv);
        for (int k = std::abs(e); k > 0; --k) zp *= base;
        acc += c.eval(qv) * zp;
    }
    return acc;
}

ZRat QZ::to_zrat() const {
    if (t.empty()) return ZRat();
    int low = std::min(0, t.begin()->first);
    std::vector<RatFunc> num(t.rbegin()->first - low + 1);
    for (auto& [e, c] : t) num[e - low] = c;
    ZRat r(ZPoly(std::move(num)));
    if (low < 0) r = r / ZRat::z(-low);
    return r;
}

std::string QZ::str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*z^" << e;
    }
    return os.str();
}

int ModuleData::kexp(int i, int b) const {
    const std::vector<int>& w = wt2[b];
    if (family == Family::A) {
        if (i == 0) return (w[n] - w[0]) / 2;
        return (w[i - 1] - w[i]) / 2;
    }
    if (i == 0) return -(w[0] + w[1]) / 2;
    if (i == n) return (w[n - 2] + w[n - 1]) / 2;
    return (w[i - 1] - w[i]) / 2;
}

SparseMat<QZ> ModuleData::kmat(int i) const {
    SparseMat<QZ> m(dim, dim);
    for (int b = 0; b < dim; ++b) m.set(b, b, QZ(Laurent::q(kexp(i, b))));
    return m;
}

SparseMat<QZ> ModuleData::kmat_inv(int i) const {
    SparseMat<QZ> m(dim, dim);
    for (int b = 0; b < dim; ++b) m.set(b, b, QZ(Laurent::q(-kexp(i, b))));
    return m;
}

SparseMat<QZ> ModuleData::kbalance(int i) const {
    SparseMat<QZ> m(dim, dim);
    for (int b = 0; b < dim; ++b) m.set(b, b, QZ(Laurent::qint(kexp(i, b))));
    return m;
}

std::vector<int> alpha_wt2(Family fam, int n, int i) {
    int nc = fam == Family::A ? n + 1 : n;
    std::vector<int> w(nc, 0);
    if (fam == Family::A) {
        if (i == 0) {  // -theta = epsilon_{n+1} - epsilon_1
            w[n] = 2;
            w[0] = -2;
        } else {
            w[i - 1] = 2;
            w[i] = -2;
        }
        return w;
    }
    if (i == 0) {  // -theta = -epsilon_1 - epsilon_2
        w[0] = -2;
        w[1] = -2;
    } else if (i == n) {
        w[n - 2] = 2;
        w[n - 1] = 2;
    } else {
        w[i - 1] = 2;
        w[i] = -2;
    }
    return w;
}

int affine_cartan(Family fam, int n, int i, int j) {
    if (i == j) return 2;
    auto adjacent = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (fam == Family::A) {
            if (n == 1) return false;  // the double bond is handled separately
            return (b - a == 1) || (a == 0 && b == n);
        }
        if (a == 0) return b == 2;
        if (b - a == 1 && b <= n - 1) return true;
        if (a == n - 2 && b == n) return true;
        return false;
    };
    if (fam == Family::A && n == 1) return -2;
    return adjacent(i, j) ? -1 : 0;
}

ModuleData ModuleData::vector_rep(Family fam, int n) {
    ModuleData m;
    m.family = fam;
    m.n = n;
    if (fam == Family::A) {
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "type A requires rank >= 1");
        m.dim = n + 1;
        for (int j = 1; j <= n + 1; ++j) {
            m.labels.push_back("v" + std::to_string(j));
            std::vector<int> w(n + 1, 0);
            w[j - 1] = 2;
            m.wt2.push_back(w);
        }
        m.e.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
        m.f.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
        QZ one{Laurent(1)};
        for (int i = 1; i <= n; ++i) {
            m.e[i].set(i - 1, i, one);  // e_i v_{i+1} = v_i
            m.f[i].set(i, i - 1, one);  // f_i v_i = v_{i+1}
        }
        m.e[0].set(n, 0, one);  // e_0 v_1 = v_{n+1}
        m.f[0].set(0, n, one);  // f_0 v_{n+1} = v_1
        m.extremal = 0;
        return m;
    }
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "type D requires rank >= 4");
    m.dim = 2 * n;
    // basis order: v_1 .. v_n, v_{bar n} .. v_{bar 1}
    auto plain = [&](int j) { return j - 1; };       // index of v_j
    auto barred = [&](int j) { return 2 * n - j; };  // index of v_{bar j}
    for (int j = 1; j <= n; ++j) {
        m.labels.push_back("v" + std::to_string(j));
        std::vector<int> w(n, 0);
        w[j - 1] = 2;
        m.wt2.push_back(w);
    }
    for (int j = n; j >= 1; --j) {
        m.labels.push_back("v~" + std::to_string(j));
    }
    m.wt2.resize(2 * n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> w(n, 0);
        w[j - 1] = -2;
        m.wt2[barred(j)] = w;
    }
    m.e.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
    m.f.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
    QZ one{Laurent(1)};
    for (int i = 1; i <= n - 1; ++i) {
        m.e[i].set(plain(i), plain(i + 1), one);    // e_i v_{i+1} = v_i
        m.e[i].set(barred(i + 1), barred(i), one);  // e_i v_{bar i} = v_{bar(i+1)}
        m.f[i].set(plain(i + 1), plain(i), one);
        m.f[i].set(barred(i), barred(i + 1), one);
    }
    m.e[n].set(plain(n), barred(n - 1), one);    // e_n v_{bar(n-1)} = v_n
    m.e[n].set(plain(n - 1), barred(n), one);    // e_n v_{bar n} = v_{n-1}
    m.f[n].set(barred(n), plain(n - 1), one);
    m.f[n].set(barred(n - 1), plain(n), one);
    m.e[0].set(barred(1), plain(2), one);  // e_0 v_2 = v_{bar 1}
    m.e[0].set(barred(2), plain(1), one);  // e_0 v_1 = v_{bar 2}
    m.f[0].set(plain(1), barred(2), one);
    m.f[0].set(plain(2), barred(1), one);
    m.extremal = 0;
    return m;
}

ModuleData ModuleData::spin_rep(int n, int sign) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "type D requires rank >= 4");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    ModuleData m;
    m.family = Family::D;
    m.n = n;
    // basis: sign patterns (m_1..m_n) with product = sign; bit k of the mask
    // set means m_{k+1} = -
    std::vector<unsigned> masks;
    std::map<unsigned, int> index;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int minus = __builtin_popcount(mask);
        if (((minus % 2 == 0) ? 1 : -1) == sign) {
            index[mask] = static_cast<int>(masks.size());
            masks.push_back(mask);
        }
    }
    m.dim = static_cast<int>(masks.size());
    for (unsigned mask : masks) {
        std::string lbl;
        std::vector<int> w(n, 0);
        for (int k = 0; k < n; ++k) {
            bool minus = mask & (1u << k);
            lbl += minus ? '-' : '+';
            w[k] = minus ? -1 : 1;
        }
        m.labels.push_back(lbl);
        m.wt2.push_back(w);
    }
    m.e.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
    m.f.assign(n + 1, SparseMat<QZ>(m.dim, m.dim));
    QZ one{Laurent(1)};
    auto bit = [](unsigned mask, int pos1) { return (mask >> (pos1 - 1)) & 1u; };  // 1 = minus
    for (size_t b = 0; b < masks.size(); ++b) {
        unsigned mask = masks[b];
        for (int i = 1; i <= n - 1; ++i) {
            if (bit(mask, i) == 1 && bit(mask, i + 1) == 0) {
                unsigned to = mask ^ (1u << (i - 1)) ^ (1u << i);
                m.e[i].set(index.at(to), static_cast<int>(b), one);
            }
            if (bit(mask, i) == 0 && bit(mask, i + 1) == 1) {
                unsigned to = mask ^ (1u << (i - 1)) ^ (1u << i);
                m.f[i].set(index.at(to), static_cast<int>(b), one);
            }
        }
        if (bit(mask, n - 1) == 1 && bit(mask, n) == 1) {
            unsigned to = mask ^ (1u << (n - 2)) ^ (1u << (n - 1));
            m.e[n].set(index.at(to), static_cast<int>(b), one);
        }
        if (bit(mask, n - 1) == 0 && bit(mask, n) == 0) {
            unsigned to = mask ^ (1u << (n - 2)) ^ (1u << (n - 1));
            m.f[n].set(index.at(to), static_cast<int>(b), one);
        }
        if (bit(mask, 1) == 0 && bit(mask, 2) == 0) {
            unsigned to = mask ^ 1u ^ 2u;
            m.e[0].set(index.at(to), static_cast<int>(b), one);
        }
        if (bit(mask, 1) == 1 && bit(mask, 2) == 1) {
            unsigned to = mask ^ 1u ^ 2u;
            m.f[0].set(index.at(to), static_cast<int>(b), one);
        }
    }
    // extremal vector: all plus for spin+, minus only in the last slot for spin-
    unsigned ext_mask = (sign == 1) ? 0u : (1u << (n - 1));
    m.extremal = index.at(ext_mask);
    return m;
}

ModuleData evaluate(const ModuleData& m, int neg_q_exp) {
    ModuleData r = m;
    QZ tw{Laurent::neg_q_pow(neg_q_exp)};
    QZ tw_inv{Laurent::neg_q_pow(-neg_q_exp)};
    r.e[0] = r.e[0].map_entries<QZ>([&](const QZ& v) { return v * tw; });
    r.f[0] = r.f[0].map_entries<QZ>([&](const QZ& v) { return v * tw_inv; });
    return r;
}

ModuleData evaluate_symbolic(const ModuleData& m) {
    ModuleData r = m;
    QZ z = QZ::monomial(RatFunc(1), 1);
    QZ zinv = QZ::monomial(RatFunc(1), -1);
    r.e[0] = r.e[0].map_entries<QZ>([&](const QZ& v) { return v * z; });
    r.f[0] = r.f[0].map_entries<QZ>([&](const QZ& v) { return v * zinv; });
    return r;
}

ModuleData tensor(const ModuleData& a, const ModuleData& b) {
    if (a.family != b.family || a.n != b.n)
        throw Error(ErrorKind::InvalidArgument, "tensor factors live over different algebras");
    ModuleData m;
    m.family = a.family;
    m.n = a.n;
    m.dim = a.dim * b.dim;
    auto id = [&](int x, int y) { return x * b.dim + y; };
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < b.dim; ++y) {
            m.labels.push_back(a.labels[x] + "(x)" + b.labels[y]);
            std::vector<int> w = a.wt2[x];
            for (size_t k = 0; k < w.size(); ++k) w[k] += b.wt2[y][k];
            m.wt2.push_back(std::move(w));
        }
    m.e.assign(m.n + 1, SparseMat<QZ>(m.dim, m.dim));
    m.f.assign(m.n + 1, SparseMat<QZ>(m.dim, m.dim));
    for (int i = 0; i <= m.n; ++i) {
        for (int r = 0; r < a.dim; ++r)
            for (auto& [c, v] : a.e[i].row(r))
                for (int y = 0; y < b.dim; ++y)
                    m.e[i].add(id(r, y), id(c, y), v * QZ(Laurent::q(-b.kexp(i, y))));
        for (int r = 0; r < b.dim; ++r)
            for (auto& [c, v] : b.e[i].row(r))
                for (int x = 0; x < a.dim; ++x) m.e[i].add(id(x, r), id(x, c), v);
        for (int r = 0; r < a.dim; ++r)
            for (auto& [c, v] : a.f[i].row(r))
                for (int y = 0; y < b.dim; ++y) m.f[i].add(id(r, y), id(c, y), v);
        for (int r = 0; r < b.dim; ++r)
            for (auto& [c, v] : b.f[i].row(r))
                for (int x = 0; x < a.dim; ++x)
                    m.f[i].add(id(x, r), id(x, c), v * QZ(Laurent::q(a.kexp(i, x))));
    }
    m.extremal = id(a.extremal, b.extremal);
    return m;
}

ModuleData direct_sum(const ModuleData& a, const ModuleData& b) {
    if (a.family != b.family || a.n != b.n)
        throw Error(ErrorKind::InvalidArgument, "summands live over different algebras");
    ModuleData m;
    m.family = a.family;
    m.n = a.n;
    m.dim = a.dim + b.dim;
    m.labels = a.labels;
    m.labels.insert(m.labels.end(), b.labels.begin(), b.labels.end());
    m.wt2 = a.wt2;
    m.wt2.insert(m.wt2.end(), b.wt2.begin(), b.wt2.end());
    m.e.assign(m.n + 1, SparseMat<QZ>(m.dim, m.dim));
    m.f.assign(m.n + 1, SparseMat<QZ>(m.dim, m.dim));
    for (int i = 0; i <= m.n; ++i) {
        for (int r = 0; r < a.dim; ++r) {
            for (auto& [c, v] : a.e[i].row(r)) m.e[i].set(r, c, v);
            for (auto& [c, v] : a.f[i].row(r)) m.f[i].set(r, c, v);
        }
        for (int r = 0; r < b.dim; ++r) {
            for (auto& [c, v] : b.e[i].row(r)) m.e[i].set(a.dim + r, a.dim + c, v);
            for (auto& [c, v] : b.f[i].row(r)) m.f[i].set(a.dim + r, a.dim + c, v);
        }
    }
    m.extremal = a.extremal;
    return m;
}

namespace {

bool weight_steps_ok(const ModuleData& m, const SparseMat<QZ>& g, const std::vector<int>& step) {
    for (int r = 0; r < m.dim; ++r)
        for (auto& [c, v] : g.row(r)) {
            for (size_t k = 0; k < step.size(); ++k)
                if (m.wt2[r][k] - m.wt2[c][k] != step[k]) return false;
        }
    return true;
}

}  // namespace

std::string check_relations(const ModuleData& m, bool serre) {
    // every entry of e_i raises the weight by cl(alpha_i), f_i lowers it
    for (int i = 0; i <= m.n; ++i) {
        std::vector<int> step = alpha_wt2(m.family, m.n, i);
        if (!weight_steps_ok(m, m.e[i], step))
            return "e_" + std::to_string(i) + " does not shift weights by alpha";
        std::vector<int> down(step);
        for (int& x : down) x = -x;
        if (!weight_steps_ok(m, m.f[i], down))
            return "f_" + std::to_string(i) + " does not shift weights by -alpha";
    }
    // [e_i, f_j] = delta_ij (K_i - K_i^{-1}) / (q - q^{-1})
    for (int i = 0; i <= m.n; ++i)
        for (int j = 0; j <= m.n; ++j) {
            SparseMat<QZ> lhs = m.e[i] * m.f[j] - m.f[j] * m.e[i];
            if (i == j) lhs = lhs - m.kbalance(i);
            if (!lhs.is_zero())
                return "[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "] is wrong";
        }
    if (serre) {
        QZ two{Laurent::qint(2)};
        for (int i = 0; i <= m.n; ++i)
            for (int j = 0; j <= m.n; ++j) {
                if (i == j) continue;
                int a = affine_cartan(m.family, m.n, i, j);
                for (auto [x, y] : {std::pair(&m.e, &m.e), std::pair(&m.f, &m.f)}) {
                    const auto& gi = (*x)[i];
                    const auto& gj = (*y)[j];
                    SparseMat<QZ> res(m.dim, m.dim);
                    if (a == 0) {
                        res = gi * gj - gj * gi;
                    } else if (a == -1) {
                        res = gi * gi * gj;
                        SparseMat<QZ> mid = gi * gj * gi;
                        res = res - mid.map_entries<QZ>([&](const QZ& v) { return v * two; });
                        res = res + gj * gi * gi;
                    } else {
                        continue;  // the rank-1 affine double bond is not checked
                    }
                    if (!res.is_zero())
                        return "Serre relation fails for (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
                }
            }
    }
    return "";
}

}  // namespace qar::uqd
