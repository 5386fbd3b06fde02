#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra/laurent.hpp"

namespace qar::cartan {

enum class Family { A, D, E };

struct CartanType {
    Family family;
    int rank;

    CartanType(Family f, int r) : family(f), rank(r) { validate(); }
    static CartanType parse(char f, int rank);
    void validate() const;
    char letter() const { return family == Family::A ? 'A' : family == Family::D ? 'D' : 'E'; }
    std::string str() const { return std::string(1, letter()) + std::to_string(rank); }
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Root in simple-root coordinates (index 0 is the vertex labeled 1).
using Root = std::vector<int>;

inline int height(const Root& b) {
    int h = 0;
    for (int c : b) h += c;
    return h;
}
/// |beta| = sum of absolute values of the coefficients
inline int abs_height(const Root& b) {
    int h = 0;
    for (int c : b) h += std::abs(c);
    return h;
}
Root negated(const Root& b);
bool is_nonneg(const Root& b);

/// Reduced word; letters are 1-based vertex indices, the leftmost letter
/// acts last.
using WeylWord = std::vector<int>;

/// Edges of the Dynkin diagram as sorted (i, j) pairs with i < j.
std::vector<std::pair<int, int>> dynkin_edges(const CartanType& t);

class RootSystem {
public:
    explicit RootSystem(CartanType t);

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // 1-based
    bool adjacent(int i, int j) const { return i != j && cartan(i, j) == -1; }
    int vertex_degree(int i) const;
    bool extremal_vertex(int i) const { return vertex_degree(i) == 1; }
    /// graph distance in the Dynkin diagram
    int distance(int i, int j) const { return dist_[i - 1][j - 1]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // i<j pairs

    Root simple_root(int i) const;
    const std::vector<Root>& positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    bool is_positive_root(const Root& b) const { return index_.count(b) != 0; }
    bool is_root(const Root& b) const;
    /// index of a positive root in positive_roots(), -1 if absent
    int root_index(const Root& b) const;

    Root reflect(int i, Root b) const;  // s_i, 1-based
    Root apply_word(const WeylWord& w, Root b) const;
    WeylWord longest_element() const;
    int star(int i) const;  // the involution i -> i* with w0(alpha_i) = -alpha_{i*}
    int coxeter_number() const;
    int bilinear(const Root& b, const Root& c) const;  // (b, c)

private:
    CartanType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> dist_;
    std::vector<Root> positive_;
    std::map<Root, int> index_;
    std::vector<int> star_;
};

}  // namespace qar::cartan
