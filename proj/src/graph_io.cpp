#include "cospec/graph_io.hpp"

#include <algorithm>

namespace cospec {

namespace {

constexpr int kMaxGraph6Order = 62;

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxGraph6Order)
        throw GraphError("graph6 encoder supports n <= 62, got " + std::to_string(n));

    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("graph6: empty input");
    const int lead = static_cast<unsigned char>(text[0]);
    if (lead < 63 || lead > 126)
        throw ParseError("graph6: invalid order byte");
    if (lead == 126)
        throw ParseError("graph6: orders above 62 are not supported");
    const int n = lead - 63;

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (pairs + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(text.size()));
    }

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int c = static_cast<unsigned char>(text[1 + k / 6]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: byte out of range at offset " + std::to_string(1 + k / 6));
            if (((c - 63) >> (5 - k % 6)) & 1)
                b.set_edge_unchecked(i, j);
        }
    }
    if (pairs % 6 != 0) {
        const int last = static_cast<unsigned char>(text.back()) - 63;
        if (last < 0 || last > 63)
            throw ParseError("graph6: byte out of range in final group");
        if (last & ((1 << (6 - pairs % 6)) - 1))
            throw ParseError("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

nlohmann::json to_json(const Graph& g)
{
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON: expected object with keys \"n\" and \"edges\"");
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 0)
        throw ParseError("graph JSON: \"n\" must be a non-negative integer");
    const auto& je = j.at("edges");
    if (!je.is_array())
        throw ParseError("graph JSON: \"edges\" must be an array");

    const int n = jn.get<int>();
    GraphBuilder b(n);
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("graph JSON: each edge must be a pair of integers");
        try {
            b.add_edge(e[0].get<int>(), e[1].get<int>());
        } catch (const GraphError& err) {
            throw ParseError(std::string("graph JSON: ") + err.what());
        }
    }
    return std::move(b).build();
}

Graph parse_graph(std::string_view text)
{
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& err) {
            throw ParseError(std::string("graph JSON: ") + err.what());
        }
        return graph_from_json(j);
    }
    return from_graph6(body);
}

} // namespace cospec
