#pragma once

#include "cospec/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cospec {

enum class CreationStep { Isolated, Dominating };

/// Threshold-graph encoding: vertices are added left to right, each either
/// isolated or adjacent to every earlier vertex.
struct CreationSequence {
    std::vector<CreationStep> steps;

    /// Parses strings such as "iid" ('i' isolated, 'd' dominating).
    static CreationSequence parse(std::string_view text);
    static CreationSequence random(int length, std::uint64_t seed);
};

Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,n-1} with the center at vertex 0.
Graph star(int n);
Graph complete_multipartite(std::span<const int> parts);
/// K_{2n} minus the perfect matching {2i, 2i+1}.
Graph cocktail_party(int n);
Graph threshold_from_sequence(const CreationSequence& seq);

/// K1 v (K_{s,...,s} u (s^2-s)K1) with k parts.
/// Vertex order: apex 0, then parts B1..Bk (s vertices each), then the s^2-s pendants.
Graph tightness_family(int s, int k);

struct TightnessLayout {
    Vertex apex;
    std::vector<VertexSet> parts;
    VertexSet pendants;
};
TightnessLayout tightness_layout(int s, int k);

/// Vertices are the edges of h in lexicographic order.
Graph line_graph(const Graph& h);

/// L(H; a_1..a_n): the line graph of h, followed by blocks CP(a_1), ..., CP(a_n).
/// Every vertex of CP(a_i) is joined to every line-graph vertex whose edge is incident with i.
Graph generalized_line_graph(const Graph& h, std::span<const int> counts);

/// a..e = 0..4 with edges ab, ac, bc, bd, de, ce.
Graph house_graph();

/// Random cograph from a random recursive cotree. Deterministic in (n, seed).
Graph random_cograph(int n, std::uint64_t seed);

/// Uniform labeled graph G(n, 1/2).
Graph random_graph(int n, std::uint64_t seed);

} // namespace cospec
