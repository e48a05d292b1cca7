#pragma once

#include "cospec/graph.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cospec {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 without the optional ">>graph6<<" header. Only 0 <= n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u,v], ...]} with u < v, sorted, no duplicates.
nlohmann::json to_json(const Graph& g);
/// Accepts edges in any order and orientation; duplicates collapse.
Graph graph_from_json(const nlohmann::json& j);

/// Sniffs the payload: a JSON object if it starts with '{', graph6 otherwise.
Graph parse_graph(std::string_view text);

} // namespace cospec
