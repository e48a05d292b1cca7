#pragma once

#include "cospec/graph.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cospec {

using P4Witness = std::array<Vertex, 4>;

class NotACograph : public std::runtime_error {
public:
    explicit NotACograph(P4Witness witness);
    const P4Witness& witness() const { return witness_; }

private:
    P4Witness witness_;
};

class MalformedCotree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CotreeNode {
    enum class Kind { Leaf, Union, Join };

    Kind kind = Kind::Leaf;
    Vertex vertex = -1;                 // leaves only
    std::vector<CotreeNode> children;   // internal nodes only, sorted by min_leaf()

    Vertex min_leaf() const;
    bool operator==(const CotreeNode&) const = default;
};

/// Canonical union/join decomposition. An absent root encodes the graph on zero vertices.
///
/// Invariants: union and join levels alternate, every internal node has at least two
/// children, and children are ordered by their minimum leaf label.
struct Cotree {
    std::optional<CotreeNode> root;

    int leaf_count() const;
    bool operator==(const Cotree&) const = default;
};

bool is_cograph(const Graph& g);

/// Throws NotACograph carrying the lexicographically least induced P4.
Cotree build_cotree(const Graph& g);

/// Leaves are adjacent iff their deepest common ancestor is a join node.
/// Throws MalformedCotree on broken labels, arity, or alternation.
Graph cotree_to_graph(const Cotree& tree);

/// Lexicographically least ordered (a, b, c, d) whose only edges are ab, bc, cd.
std::optional<P4Witness> find_induced_p4(const Graph& g);

nlohmann::json to_json(const Cotree& tree);
Cotree cotree_from_json(const nlohmann::json& j);

} // namespace cospec
