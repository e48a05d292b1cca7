#include "cospec/cograph.hpp"

#include <algorithm>
#include <string>

namespace cospec {

NotACograph::NotACograph(P4Witness witness)
    : std::runtime_error("graph is not a cograph: induced P4 " + std::to_string(witness[0]) + "-" +
                         std::to_string(witness[1]) + "-" + std::to_string(witness[2]) + "-" +
                         std::to_string(witness[3])),
      witness_(witness)
{
}

Vertex CotreeNode::min_leaf() const
{
    if (kind == Kind::Leaf)
        return vertex;
    Vertex best = -1;
    for (const auto& c : children) {
        const Vertex m = c.min_leaf();
        if (best < 0 || m < best)
            best = m;
    }
    return best;
}

int Cotree::leaf_count() const
{
    if (!root)
        return 0;
    int count = 0;
    std::vector<const CotreeNode*> stack{&*root};
    while (!stack.empty()) {
        const auto* node = stack.back();
        stack.pop_back();
        if (node->kind == CotreeNode::Kind::Leaf)
            ++count;
        for (const auto& c : node->children)
            stack.push_back(&c);
    }
    return count;
}

namespace {

/// Connected components of G[s] (or of its complement), each sorted, ordered by minimum.
std::vector<VertexSet> split(const Graph& g, const VertexSet& s, bool in_complement)
{
    std::vector<std::uint64_t> pending(g.words(), 0);
    for (auto v : s)
        pending[v >> 6] |= std::uint64_t{1} << (v & 63);

    std::vector<VertexSet> parts;
    std::vector<Vertex> stack;
    for (auto seed : s) {
        if (!bits::test(pending, seed))
            continue;
        pending[seed >> 6] &= ~(std::uint64_t{1} << (seed & 63));
        VertexSet part;
        stack.push_back(seed);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            part.push_back(u);
            const auto row = g.row(u);
            for (std::size_t w = 0; w < pending.size(); ++w) {
                std::uint64_t reach = pending[w] & (in_complement ? ~row[w] : row[w]);
                pending[w] &= ~reach;
                while (reach) {
                    const int bit = __builtin_ctzll(reach);
                    reach &= reach - 1;
                    stack.push_back(static_cast<Vertex>(w * 64 + bit));
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

std::optional<CotreeNode> decompose(const Graph& g, const VertexSet& s)
{
    if (s.size() == 1)
        return CotreeNode{CotreeNode::Kind::Leaf, s.front(), {}};

    auto parts = split(g, s, false);
    auto kind = CotreeNode::Kind::Union;
    if (parts.size() == 1) {
        parts = split(g, s, true);
        kind = CotreeNode::Kind::Join;
        if (parts.size() == 1)
            return std::nullopt;
    }
    CotreeNode node{kind, -1, {}};
    node.children.reserve(parts.size());
    for (const auto& p : parts) {
        auto child = decompose(g, p);
        if (!child)
            return std::nullopt;
        node.children.push_back(std::move(*child));
    }
    return node;
}

VertexSet all_vertices(const Graph& g)
{
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        s[v] = v;
    return s;
}

} // namespace

bool is_cograph(const Graph& g)
{
    if (g.order() == 0)
        return true;
    return decompose(g, all_vertices(g)).has_value();
}

Cotree build_cotree(const Graph& g)
{
    if (g.order() == 0)
        return {};
    auto root = decompose(g, all_vertices(g));
    if (!root)
        throw NotACograph(*find_induced_p4(g));
    return Cotree{std::move(root)};
}

namespace {

void collect(const CotreeNode& node, CotreeNode::Kind parent, GraphBuilder& b, std::vector<int>& seen,
             VertexSet& leaves)
{
    using Kind = CotreeNode::Kind;
    if (node.kind == Kind::Leaf) {
        if (!node.children.empty())
            throw MalformedCotree("leaf with children");
        if (node.vertex < 0 || node.vertex >= static_cast<int>(seen.size()))
            throw MalformedCotree("leaf label " + std::to_string(node.vertex) + " out of range");
        if (seen[node.vertex]++)
            throw MalformedCotree("leaf label " + std::to_string(node.vertex) + " repeated");
        leaves.push_back(node.vertex);
        return;
    }
    if (node.children.size() < 2)
        throw MalformedCotree("internal node with fewer than two children");
    if (node.kind == parent)
        throw MalformedCotree("union and join levels must alternate");

    std::vector<VertexSet> below;
    below.reserve(node.children.size());
    for (const auto& c : node.children) {
        below.emplace_back();
        collect(c, node.kind, b, seen, below.back());
    }
    if (node.kind == Kind::Join)
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t j = i + 1; j < below.size(); ++j)
                for (auto u : below[i])
                    for (auto v : below[j])
                        b.set_edge_unchecked(u, v);
    for (auto& part : below)
        leaves.insert(leaves.end(), part.begin(), part.end());
}

} // namespace

Graph cotree_to_graph(const Cotree& tree)
{
    if (!tree.root)
        return Graph(0);
    const int n = tree.leaf_count();
    GraphBuilder b(n);
    std::vector<int> seen(n, 0);
    VertexSet leaves;
    collect(*tree.root, CotreeNode::Kind::Leaf, b, seen, leaves);
    return std::move(b).build();
}

std::optional<P4Witness> find_induced_p4(const Graph& g)
{
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (!g.adjacent(a, b))
                continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || !g.adjacent(b, c) || g.adjacent(a, c))
                    continue;
                for (Vertex d = 0; d < n; ++d) {
                    if (d == a || d == b || !g.adjacent(c, d) || g.adjacent(a, d) || g.adjacent(b, d))
                        continue;
                    return P4Witness{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

namespace {

nlohmann::json node_to_json(const CotreeNode& node)
{
    using Kind = CotreeNode::Kind;
    if (node.kind == Kind::Leaf)
        return {{"kind", "leaf"}, {"v", node.vertex}};
    auto children = nlohmann::json::array();
    for (const auto& c : node.children)
        children.push_back(node_to_json(c));
    return {{"kind", node.kind == Kind::Union ? "union" : "join"}, {"children", std::move(children)}};
}

CotreeNode node_from_json(const nlohmann::json& j)
{
    using Kind = CotreeNode::Kind;
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw MalformedCotree("cotree node needs a string \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        if (!j.contains("v") || !j.at("v").is_number_integer())
            throw MalformedCotree("leaf needs integer \"v\"");
        return {Kind::Leaf, j.at("v").get<int>(), {}};
    }
    if (kind != "union" && kind != "join")
        throw MalformedCotree("unknown cotree node kind '" + kind + "'");
    if (!j.contains("children") || !j.at("children").is_array())
        throw MalformedCotree("internal node needs \"children\" array");
    CotreeNode node{kind == "union" ? Kind::Union : Kind::Join, -1, {}};
    for (const auto& c : j.at("children"))
        node.children.push_back(node_from_json(c));
    return node;
}

} // namespace

nlohmann::json to_json(const Cotree& tree)
{
    if (!tree.root)
        return nullptr;
    return node_to_json(*tree.root);
}

Cotree cotree_from_json(const nlohmann::json& j)
{
    if (j.is_null())
        return {};
    return Cotree{node_from_json(j)};
}

} // namespace cospec
