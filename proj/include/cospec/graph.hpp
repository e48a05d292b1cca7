#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ascending list of vertex labels of some host graph.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1, stored as dense bitset rows.
///
/// Values are immutable once built; every combinator returns a new graph.
/// Build through GraphBuilder or from_edge_list.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges)
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    int degree(Vertex v) const;

    /// Raw bitset row of v (open neighborhood).
    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int words() const { return words_; }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    /// Adds the undirected edge {u, v}; repeated edges collapse.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    /// Unchecked variant for hot loops that already guarantee u != v in range.
    void set_edge_unchecked(Vertex u, Vertex v);

    int order() const { return g_.n_; }
    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    Graph g_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

VertexSet neighborhood(const Graph& g, Vertex v, bool closed = false);
std::vector<VertexSet> connected_components(const Graph& g);

/// Pair index used by graph6 and the labeled enumeration: (0,1),(0,2),(1,2),(0,3),...
constexpr std::size_t pair_index(Vertex i, Vertex j) { return static_cast<std::size_t>(j) * (j - 1) / 2 + i; }

/// Labeled graph whose edge set is the bitmask over pair_index order. Requires n <= 11.
Graph from_pair_mask(int n, std::uint64_t mask);
std::uint64_t pair_mask(const Graph& g);

std::string to_string(const Graph& g);

namespace bits {

inline bool subset_of(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}

inline bool test(std::span<const std::uint64_t> row, Vertex v) { return (row[v >> 6] >> (v & 63)) & 1U; }

} // namespace bits

} // namespace cospec
