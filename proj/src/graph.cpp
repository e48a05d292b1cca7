#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cospec {

Graph::Graph(int n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto w : bits_)
        twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

int Graph::degree(Vertex v) const
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    const int n = g_.n_;
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
    }
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    set_edge_unchecked(u, v);
    return *this;
}

void GraphBuilder::set_edge_unchecked(Vertex u, Vertex v)
{
    const auto w = static_cast<std::size_t>(g_.words_);
    g_.bits_[u * w + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g_.bits_[v * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int shift = g.order();
    GraphBuilder b(shift + h.order());
    for (auto [u, v] : g.edges())
        b.set_edge_unchecked(u, v);
    for (auto [u, v] : h.edges())
        b.set_edge_unchecked(u + shift, v + shift);
    return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h)
{
    const int shift = g.order();
    GraphBuilder b(shift + h.order());
    for (auto [u, v] : g.edges())
        b.set_edge_unchecked(u, v);
    for (auto [u, v] : h.edges())
        b.set_edge_unchecked(u + shift, v + shift);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            b.set_edge_unchecked(u, v + shift);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset)
{
    VertexSet s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto v : s)
        if (v < 0 || v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));

    const int k = static_cast<int>(s.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(s[i], s[j]))
                b.set_edge_unchecked(i, j);
    return std::move(b).build();
}

VertexSet neighborhood(const Graph& g, Vertex v, bool closed)
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
    VertexSet out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.adjacent(u, v) || (closed && u == v))
            out.push_back(u);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex v = 0; v < n; ++v) {
                if (comp[v] < 0 && g.adjacent(u, v)) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph from_pair_mask(int n, std::uint64_t mask)
{
    if (n > 11)
        throw GraphError("pair mask limited to n <= 11");
    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U)
                b.set_edge_unchecked(i, j);
    return std::move(b).build();
}

std::uint64_t pair_mask(const Graph& g)
{
    if (g.order() > 11)
        throw GraphError("pair mask limited to n <= 11");
    std::uint64_t mask = 0;
    std::size_t k = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                mask |= std::uint64_t{1} << k;
    return mask;
}

std::string to_string(const Graph& g)
{
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", edges=[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << '(' << u << ',' << v << ')';
        first = false;
    }
    os << "])";
    return os.str();
}

} // namespace cospec
