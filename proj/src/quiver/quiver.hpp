#pragma once

#include <optional>

#include "cartan/cartan.hpp"

namespace qar::quiver {

using cartan::CartanType;
using cartan::Root;
using cartan::RootSystem;
using cartan::WeylWord;

/// Orientation of a Dynkin diagram.  Arrows are 1-based (source, target)
/// pairs kept sorted, one per Dynkin edge.
struct DynkinQuiver {
    CartanType type;
    std::vector<std::pair<int, int>> arrows;

    DynkinQuiver(CartanType t, std::vector<std::pair<int, int>> a);

    bool has_arrow(int s, int t) const;
    bool is_source(int i) const;  // no incoming arrows
    bool is_sink(int i) const;
    std::vector<int> sources() const;
    DynkinQuiver reflected(int i) const;  // flip all arrows at vertex i
    DynkinQuiver reversed() const;

    std::string to_json() const;
    static DynkinQuiver from_json(const std::string& text);
    friend bool operator==(const DynkinQuiver&, const DynkinQuiver&) = default;
};

/// Parse "1-2,3-2" style arrow lists.
std::vector<std::pair<int, int>> parse_arrows(const std::string& text);

/// All 2^(edges) orientations, enumerated in a fixed order (bitmask over the
/// sorted edge list).
std::vector<DynkinQuiver> all_orientations(CartanType t);

/// Height function: xi_j = xi_i - 1 for every arrow i -> j.
struct HeightFunction {
    std::vector<int> xi;  // xi[v-1] is the height of vertex v

    int at(int v) const { return xi[v - 1]; }
    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

HeightFunction height_function(const DynkinQuiver& q, int base_vertex, int base_value);

struct BetaSequence {
    WeylWord word;            // reduced word for w0 adapted to the quiver
    std::vector<Root> betas;  // beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})
};

/// Adapted reduced word for w0: repeatedly emit the smallest source of the
/// reflected quiver that keeps the word reduced.
BetaSequence adapted_w0(const RootSystem& rs, const DynkinQuiver& q);

/// The Coxeter element adapted to the quiver (each vertex once, sources first).
WeylWord adapted_coxeter(const DynkinQuiver& q);

/// Is the word adapted to q (each letter a source of the partially reflected
/// quiver)?
bool is_adapted(const DynkinQuiver& q, const WeylWord& w);

/// Convexity in the sense of Papi: whenever beta_k + beta_l = beta_j with
/// k < l, the index j lies strictly between k and l.
bool check_convexity(const RootSystem& rs, const BetaSequence& bs);

using KostantPartition = std::vector<int>;  // length = number of positive roots

/// All partitions with the same weighted root sum as c.
std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const BetaSequence& bs,
                                                 const KostantPartition& c);

/// Total order on partition vectors: c' > c iff they first differ at an
/// index where c' is larger.
bool kp_greater(const KostantPartition& a, const KostantPartition& b);

/// Minimal pairs (k, l) for beta_j (all indices 1-based): k < j < l,
/// beta_k + beta_l = beta_j, and no pair nests strictly inside.
/// Throws when beta_j is simple.
std::vector<std::pair<int, int>> minimal_pairs(const RootSystem& rs, const BetaSequence& bs, int j);

std::string quiver_dot(const DynkinQuiver& q);

}  // namespace qar::quiver
