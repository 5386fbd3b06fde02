#include "quiver/quiver.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qar::quiver {

using cartan::abs_height;
using cartan::height;
using cartan::is_nonneg;

DynkinQuiver::DynkinQuiver(CartanType t, std::vector<std::pair<int, int>> a)
    : type(t), arrows(std::move(a)) {
    std::sort(arrows.begin(), arrows.end());
    auto edges = cartan::dynkin_edges(t);
    std::set<std::pair<int, int>> want(edges.begin(), edges.end());
    std::set<std::pair<int, int>> got;
    for (auto& [s, u] : arrows) {
        auto e = std::minmax(s, u);
        if (!want.count({e.first, e.second}))
            throw Error(ErrorKind::InvalidArgument,
                        "arrow " + std::to_string(s) + "->" + std::to_string(u) +
                            " is not an edge of the Dynkin diagram " + t.str());
        if (!got.insert({e.first, e.second}).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate orientation for one Dynkin edge");
    }
    if (got.size() != want.size())
        throw Error(ErrorKind::InvalidArgument, "orientation does not cover every Dynkin edge");
}

bool DynkinQuiver::has_arrow(int s, int t) const {
    return std::find(arrows.begin(), arrows.end(), std::make_pair(s, t)) != arrows.end();
}

bool DynkinQuiver::is_source(int i) const {
    for (auto& [s, t] : arrows)
        if (t == i) return false;
    return true;
}

bool DynkinQuiver::is_sink(int i) const {
    for (auto& [s, t] : arrows)
        if (s == i) return false;
    return true;
}

std::vector<int> DynkinQuiver::sources() const {
    std::vector<int> out;
    for (int v = 1; v <= type.rank; ++v)
        if (is_source(v)) out.push_back(v);
    return out;
}

DynkinQuiver DynkinQuiver::reflected(int i) const {
    auto a = arrows;
    for (auto& [s, t] : a)
        if (s == i || t == i) std::swap(s, t);
    return DynkinQuiver(type, std::move(a));
}

DynkinQuiver DynkinQuiver::reversed() const {
    auto a = arrows;
    for (auto& [s, t] : a) std::swap(s, t);
    return DynkinQuiver(type, std::move(a));
}

std::string DynkinQuiver::to_json() const {
    nlohmann::json j;
    j["type"] = std::string(1, type.letter());
    j["rank"] = type.rank;
    auto arr = nlohmann::json::array();
    for (auto& [s, t] : arrows) arr.push_back({s, t});
    j["arrows"] = arr;
    return j.dump();
}

DynkinQuiver DynkinQuiver::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string fam = j.at("type").get<std::string>();
    if (fam.size() != 1) throw Error(ErrorKind::InvalidArgument, "bad type string");
    CartanType t = CartanType::parse(fam[0], j.at("rank").get<int>());
    std::vector<std::pair<int, int>> arrows;
    for (auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return DynkinQuiver(t, std::move(arrows));
}

std::vector<std::pair<int, int>> parse_arrows(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "arrow must look like '1-2': " + item);
        out.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    return out;
}

std::vector<DynkinQuiver> all_orientations(CartanType t) {
    auto edges = cartan::dynkin_edges(t);
    int m = static_cast<int>(edges.size());
    std::vector<DynkinQuiver> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> arrows;
        for (int e = 0; e < m; ++e) {
            auto [a, b] = edges[e];
            if (mask & (1u << e))
                arrows.push_back({b, a});
            else
                arrows.push_back({a, b});
        }
        out.push_back(DynkinQuiver(t, std::move(arrows)));
    }
    return out;
}

HeightFunction height_function(const DynkinQuiver& q, int base_vertex, int base_value) {
    int n = q.type.rank;
    std::vector<int> xi(n, INT_MIN);
    xi[base_vertex - 1] = base_value;
    std::deque<int> work{base_vertex};
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (auto& [s, t] : q.arrows) {
            int other = (s == v) ? t : (t == v) ? s : 0;
            if (!other) continue;
            int val = (s == v) ? xi[v - 1] - 1 : xi[v - 1] + 1;
            if (xi[other - 1] == INT_MIN) {
                xi[other - 1] = val;
                work.push_back(other);
            } else if (xi[other - 1] != val) {
                throw Error(ErrorKind::Internal, "inconsistent height function");
            }
        }
    }
    return HeightFunction{xi};
}

WeylWord adapted_coxeter(const DynkinQuiver& q) {
    // topological order of the acyclic orientation: emit sources repeatedly
    WeylWord w;
    DynkinQuiver cur = q;
    std::set<int> done;
    while (static_cast<int>(w.size()) < q.type.rank) {
        int pick = -1;
        for (int v = 1; v <= q.type.rank; ++v) {
            if (done.count(v)) continue;
            bool src = true;
            for (auto& [s, t] : cur.arrows)
                if (t == v && !done.count(s)) src = false;
            if (src) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw Error(ErrorKind::Internal, "acyclic orientation has no source");
        w.push_back(pick);
        done.insert(pick);
    }
    return w;
}

BetaSequence adapted_w0(const RootSystem& rs, const DynkinQuiver& q) {
    BetaSequence out;
    DynkinQuiver cur = q;
    WeylWord prefix;  // letters in application order (first applied first)
    int r = rs.num_positive();
    while (static_cast<int>(out.word.size()) < r) {
        int pick = -1;
        Root beta;
        for (int v : cur.sources()) {
            // beta = s_{i_1} ... s_{i_{k-1}} (alpha_v), prefix applied left to right
            Root b = rs.simple_root(v);
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) b = rs.reflect(*it, std::move(b));
            if (is_nonneg(b)) {
                pick = v;
                beta = std::move(b);
                break;
            }
        }
        if (pick < 0) throw Error(ErrorKind::Internal, "no source keeps the word reduced");
        prefix.push_back(pick);
        out.word.push_back(pick);
        out.betas.push_back(std::move(beta));
        cur = cur.reflected(pick);
    }
    return out;
}

bool is_adapted(const DynkinQuiver& q, const WeylWord& w) {
    DynkinQuiver cur = q;
    for (int letter : w) {
        if (!cur.is_source(letter)) return false;
        cur = cur.reflected(letter);
    }
    return true;
}

bool check_convexity(const RootSystem& rs, const BetaSequence& bs) {
    int r = static_cast<int>(bs.betas.size());
    std::map<Root, int> pos;
    for (int k = 0; k < r; ++k) pos[bs.betas[k]] = k;
    for (int k = 0; k < r; ++k) {
        for (int l = k + 1; l < r; ++l) {
            Root sum = bs.betas[k];
            for (int i = 0; i < rs.rank(); ++i) sum[i] += bs.betas[l][i];
            auto it = pos.find(sum);
            if (it == pos.end()) continue;
            int j = it->second;
            if (!(k < j && j < l)) return false;
        }
    }
    return true;
}

namespace {

void kp_search(const std::vector<Root>& betas, int k, Root remaining,
               KostantPartition& cur, std::vector<KostantPartition>& out) {
    int r = static_cast<int>(betas.size());
    bool empty = is_nonneg(remaining) && height(remaining) == 0;
    if (k == r) {
        if (empty) out.push_back(cur);
        return;
    }
    // max multiple of betas[k] that fits componentwise
    int cap = INT_MAX;
    for (size_t i = 0; i < remaining.size(); ++i)
        if (betas[k][i] > 0) cap = std::min(cap, remaining[i] / betas[k][i]);
    if (cap == INT_MAX) cap = 0;
    for (int c = cap; c >= 0; --c) {
        Root rem = remaining;
        for (size_t i = 0; i < rem.size(); ++i) rem[i] -= c * betas[k][i];
        if (!is_nonneg(rem)) continue;
        cur[k] = c;
        kp_search(betas, k + 1, std::move(rem), cur, out);
    }
    cur[k] = 0;
}

}  // namespace

std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const BetaSequence& bs,
                                                 const KostantPartition& c) {
    if (c.size() != bs.betas.size())
        throw Error(ErrorKind::InvalidArgument, "partition length must match the root count");
    Root target(rs.rank(), 0);
    for (size_t k = 0; k < c.size(); ++k)
        for (int i = 0; i < rs.rank(); ++i) target[i] += c[k] * bs.betas[k][i];
    std::vector<KostantPartition> out;
    KostantPartition cur(c.size(), 0);
    kp_search(bs.betas, 0, target, cur, out);
    std::sort(out.begin(), out.end(), kp_greater);
    return out;
}

bool kp_greater(const KostantPartition& a, const KostantPartition& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

std::vector<std::pair<int, int>> minimal_pairs(const RootSystem& rs, const BetaSequence& bs, int j) {
    if (j < 1 || j > static_cast<int>(bs.betas.size()))
        throw Error(ErrorKind::InvalidArgument, "index out of range");
    const Root& target = bs.betas[j - 1];
    if (abs_height(target) < 2)
        throw Error(ErrorKind::InvalidArgument, "a simple root has no pair decomposition");
    std::vector<std::pair<int, int>> pairs;
    int r = static_cast<int>(bs.betas.size());
    for (int k = 1; k < j; ++k) {
        Root need = target;
        for (int i = 0; i < rs.rank(); ++i) need[i] -= bs.betas[k - 1][i];
        if (!is_nonneg(need) || height(need) == 0) continue;
        for (int l = j + 1; l <= r; ++l)
            if (bs.betas[l - 1] == need) pairs.push_back({k, l});
    }
    std::vector<std::pair<int, int>> minimal;
    for (auto& [k, l] : pairs) {
        bool nested = false;
        for (auto& [k2, l2] : pairs)
            if (k < k2 && l2 < l) nested = true;
        if (!nested) minimal.push_back({k, l});
    }
    if (minimal.empty()) throw Error(ErrorKind::Internal, "no minimal pair found");
    return minimal;
}

std::string quiver_dot(const DynkinQuiver& q) {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (int v = 1; v <= q.type.rank; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (auto& [s, t] : q.arrows) os << "  v" << s << " -> v" << t << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qar::quiver
