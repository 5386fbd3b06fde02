#include "cartan/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qar::cartan {

CartanType CartanType::parse(char f, int rank) {
    switch (f) {
        case 'A':
        case 'a':
            return CartanType(Family::A, rank);
        case 'D':
        case 'd':
            return CartanType(Family::D, rank);
        case 'E':
        case 'e':
            return CartanType(Family::E, rank);
        default:
            throw Error(ErrorKind::InvalidArgument, std::string("unknown type family '") + f + "'");
    }
}

void CartanType::validate() const {
    switch (family) {
        case Family::A:
            if (rank < 1) throw Error(ErrorKind::InvalidArgument, "type A requires rank >= 1");
            break;
        case Family::D:
            if (rank < 4) throw Error(ErrorKind::InvalidArgument, "type D requires rank >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw Error(ErrorKind::InvalidArgument, "type E requires rank 6, 7 or 8");
            break;
    }
}

Root negated(const Root& b) {
    Root r = b;
    for (int& c : r) c = -c;
    return r;
}

bool is_nonneg(const Root& b) {
    for (int c : b)
        if (c < 0) return false;
    return true;
}

std::vector<std::pair<int, int>> dynkin_edges(const CartanType& t) {
    std::vector<std::pair<int, int>> e;
    int n = t.rank;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
            break;
        case Family::D:
            // chain 1 - 2 - ... - (n-2), fork (n-2) - (n-1) and (n-2) - n
            for (int i = 1; i < n - 2; ++i) e.push_back({i, i + 1});
            e.push_back({n - 2, n - 1});
            e.push_back({n - 2, n});
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7-8), vertex 2 attached to 4
            e.push_back({1, 3});
            e.push_back({3, 4});
            e.push_back({4, 5});
            e.push_back({5, 6});
            if (n >= 7) e.push_back({6, 7});
            if (n >= 8) e.push_back({7, 8});
            e.push_back({2, 4});
            break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

RootSystem::RootSystem(CartanType t) : type_(t) {
    int n = t.rank;
    edges_ = dynkin_edges(t);
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    for (auto& [a, b] : edges_) cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;

    // graph distances by BFS
    dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> q{s};
        dist_[s][s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto& [a, b] : edges_) {
                int w = -1;
                if (a - 1 == v) w = b - 1;
                if (b - 1 == v) w = a - 1;
                if (w >= 0 && dist_[s][w] < 0) {
                    dist_[s][w] = dist_[s][v] + 1;
                    q.push_back(w);
                }
            }
        }
    }

    // positive roots by reflection closure
    std::set<Root> pos;
    std::deque<Root> work;
    for (int i = 1; i <= n; ++i) {
        Root a = simple_root(i);
        pos.insert(a);
        work.push_back(a);
    }
    while (!work.empty()) {
        Root b = work.front();
        work.pop_front();
        for (int i = 1; i <= n; ++i) {
            Root r = reflect(i, b);
            if (is_nonneg(r) && pos.insert(r).second) work.push_back(r);
        }
    }
    positive_.assign(pos.begin(), pos.end());
    std::stable_sort(positive_.begin(), positive_.end(),
                     [](const Root& a, const Root& b) { return height(a) < height(b); });
    for (size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);

    WeylWord w0 = longest_element();
    star_.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        Root img = apply_word(w0, simple_root(i));
        Root neg = negated(img);
        for (int j = 1; j <= n; ++j)
            if (neg == simple_root(j)) star_[i] = j;
        if (star_[i] == 0) throw Error(ErrorKind::Internal, "w0 does not permute the simple roots");
    }
}

int RootSystem::vertex_degree(int i) const {
    int d = 0;
    for (auto& [a, b] : edges_)
        if (a == i || b == i) ++d;
    return d;
}

Root RootSystem::simple_root(int i) const {
    Root a(type_.rank, 0);
    a[i - 1] = 1;
    return a;
}

bool RootSystem::is_root(const Root& b) const {
    if (index_.count(b)) return true;
    return index_.count(negated(b)) != 0;
}

int RootSystem::root_index(const Root& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? -1 : it->second;
}

Root RootSystem::reflect(int i, Root b) const {
    if (i < 1 || i > type_.rank) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    int pairing = 0;
    for (int j = 0; j < type_.rank; ++j) pairing += cartan_[i - 1][j] * b[j];
    b[i - 1] -= pairing;
    return b;
}

Root RootSystem::apply_word(const WeylWord& w, Root b) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) b = reflect(*it, std::move(b));
    return b;
}

WeylWord RootSystem::longest_element() const {
    // Greedy descent on rho, tracked through its pairings with the simple
    // coroots; terminates at -rho after exactly |Delta_+| reflections.
    int n = type_.rank;
    std::vector<int> d(n, 1);
    std::vector<int> emitted;
    for (;;) {
        int i = -1;
        for (int j = 0; j < n; ++j)
            if (d[j] > 0) {
                i = j;
                break;
            }
        if (i < 0) break;
        emitted.push_back(i + 1);
        int di = d[i];
        for (int j = 0; j < n; ++j) d[j] -= di * cartan_[i][j];
    }
    if (static_cast<int>(emitted.size()) != num_positive())
        throw Error(ErrorKind::Internal, "longest element has wrong length");
    // emitted letters act first-to-last; as a WeylWord the leftmost acts last
    return WeylWord(emitted.rbegin(), emitted.rend());
}

int RootSystem::star(int i) const { return star_[i]; }

int RootSystem::coxeter_number() const {
    switch (type_.family) {
        case Family::A:
            return type_.rank + 1;
        case Family::D:
            return 2 * type_.rank - 2;
        case Family::E:
            return type_.rank == 6 ? 12 : type_.rank == 7 ? 18 : 30;
    }
    throw Error(ErrorKind::Internal, "unreachable");
}

int RootSystem::bilinear(const Root& b, const Root& c) const {
    int n = type_.rank;
    long s = 0;
    for (int i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        for (int j = 0; j < n; ++j) s += static_cast<long>(b[i]) * cartan_[i][j] * c[j];
    }
    return static_cast<int>(s);
}

}  // namespace qar::cartan
