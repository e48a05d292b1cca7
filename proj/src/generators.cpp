#include "cospec/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cospec {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw GraphError(what);
}

} // namespace

CreationSequence CreationSequence::parse(std::string_view text)
{
    CreationSequence seq;
    for (char c : text) {
        if (c == 'i' || c == '0')
            seq.steps.push_back(CreationStep::Isolated);
        else if (c == 'd' || c == '1')
            seq.steps.push_back(CreationStep::Dominating);
        else
            throw GraphError(std::string("creation sequence: unexpected character '") + c + "'");
    }
    require(!seq.steps.empty(), "creation sequence must be non-empty");
    return seq;
}

CreationSequence CreationSequence::random(int length, std::uint64_t seed)
{
    require(length >= 1, "creation sequence must be non-empty");
    std::mt19937_64 rng(seed);
    CreationSequence seq;
    seq.steps.push_back(CreationStep::Isolated);
    for (int i = 1; i < length; ++i)
        seq.steps.push_back((rng() & 1U) ? CreationStep::Dominating : CreationStep::Isolated);
    return seq;
}

Graph empty_graph(int n)
{
    require(n >= 0, "vertex count must be non-negative");
    return Graph(n);
}

Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.set_edge_unchecked(v, v + 1);
    return std::move(b).build();
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.set_edge_unchecked(v, (v + 1) % n);
    return std::move(b).build();
}

Graph complete(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph star(int n)
{
    require(n >= 1, "star needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.set_edge_unchecked(0, v);
    return std::move(b).build();
}

Graph complete_multipartite(std::span<const int> parts)
{
    require(!parts.empty(), "complete multipartite graph needs at least one part");
    std::vector<int> owner;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require(parts[p] >= 1, "every part must have at least one vertex");
        owner.insert(owner.end(), parts[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(owner.size());
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (owner[u] != owner[v])
                b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph cocktail_party(int n)
{
    require(n >= 1, "cocktail party graph needs n >= 1");
    std::vector<int> parts(n, 2);
    return complete_multipartite(parts);
}

Graph threshold_from_sequence(const CreationSequence& seq)
{
    require(!seq.steps.empty(), "creation sequence must be non-empty");
    const int n = static_cast<int>(seq.steps.size());
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        if (seq.steps[v] == CreationStep::Dominating)
            for (Vertex u = 0; u < v; ++u)
                b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

TightnessLayout tightness_layout(int s, int k)
{
    require(s >= 1 && k >= 1, "tightness family needs s, k >= 1");
    TightnessLayout layout{0, {}, {}};
    Vertex next = 1;
    for (int p = 0; p < k; ++p) {
        VertexSet part(s);
        std::iota(part.begin(), part.end(), next);
        next += s;
        layout.parts.push_back(std::move(part));
    }
    layout.pendants.resize(static_cast<std::size_t>(s) * s - s);
    std::iota(layout.pendants.begin(), layout.pendants.end(), next);
    return layout;
}

Graph tightness_family(int s, int k)
{
    const auto layout = tightness_layout(s, k);
    const int n = 1 + s * k + s * s - s;
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.set_edge_unchecked(layout.apex, v);
    for (std::size_t p = 0; p < layout.parts.size(); ++p)
        for (std::size_t q = p + 1; q < layout.parts.size(); ++q)
            for (auto u : layout.parts[p])
                for (auto v : layout.parts[q])
                    b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph line_graph(const Graph& h)
{
    const auto e = h.edges();
    const int m = static_cast<int>(e.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                b.set_edge_unchecked(i, j);
    return std::move(b).build();
}

Graph generalized_line_graph(const Graph& h, std::span<const int> counts)
{
    if (static_cast<int>(counts.size()) != h.order()) {
        throw GraphError("generalized line graph: expected " + std::to_string(h.order()) + " counts, got " +
                         std::to_string(counts.size()));
    }
    for (int a : counts)
        require(a >= 0, "generalized line graph counts must be non-negative");

    const auto e = h.edges();
    const int m = static_cast<int>(e.size());
    std::vector<Vertex> block_start(counts.size());
    int n = m;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        block_start[i] = n;
        n += 2 * counts[i];
    }

    const Graph lg = line_graph(h);
    GraphBuilder b(n);
    for (auto [u, v] : lg.edges())
        b.set_edge_unchecked(u, v);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const Vertex base = block_start[i];
        const int size = 2 * counts[i];
        for (int x = 0; x < size; ++x)
            for (int y = x + 1; y < size; ++y)
                if (x / 2 != y / 2)
                    b.set_edge_unchecked(base + x, base + y);
        for (int edge = 0; edge < m; ++edge)
            if (e[edge].first == static_cast<Vertex>(i) || e[edge].second == static_cast<Vertex>(i))
                for (int x = 0; x < size; ++x)
                    b.set_edge_unchecked(edge, base + x);
    }
    return std::move(b).build();
}

Graph house_graph()
{
    return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {2, 4}});
}

namespace {

void grow_cotree(GraphBuilder& b, std::span<const Vertex> verts, bool join_level, std::mt19937_64& rng)
{
    const int size = static_cast<int>(verts.size());
    if (size <= 1)
        return;
    const int parts = std::uniform_int_distribution<int>(2, size)(rng);

    // Choose parts-1 distinct cut positions among the size-1 gaps.
    std::vector<int> gaps(size - 1);
    std::iota(gaps.begin(), gaps.end(), 1);
    std::shuffle(gaps.begin(), gaps.end(), rng);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (parts - 1));
    cuts.push_back(0);
    cuts.push_back(size);
    std::sort(cuts.begin(), cuts.end());

    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const auto block = verts.subspan(cuts[p], cuts[p + 1] - cuts[p]);
        if (join_level) {
            for (auto u : block)
                for (auto v : verts.subspan(cuts[p + 1]))
                    b.set_edge_unchecked(u, v);
        }
        grow_cotree(b, block, !join_level, rng);
    }
}

} // namespace

Graph random_cograph(int n, std::uint64_t seed)
{
    require(n >= 1, "random cograph needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    const bool join_root = (rng() & 1U) != 0;
    GraphBuilder b(n);
    grow_cotree(b, verts, join_root, rng);
    return std::move(b).build();
}

Graph random_graph(int n, std::uint64_t seed)
{
    require(n >= 0, "vertex count must be non-negative");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() & 1U)
                b.set_edge_unchecked(u, v);
    return std::move(b).build();
}

} // namespace cospec
