#pragma once

#include "cospec/graph.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// u <= v iff N(u) is contained in N[v]. Reflexive and transitive, not antisymmetric.
class PreorderRelation {
public:
    explicit PreorderRelation(const Graph& g);

    int order() const { return n_; }
    bool leq(Vertex u, Vertex v) const { return leq_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    /// u and v are duplicates or coduplicates.
    bool equivalent(Vertex u, Vertex v) const { return leq(u, v) && leq(v, u); }
    bool comparable(Vertex u, Vertex v) const { return leq(u, v) || leq(v, u); }

private:
    int n_;
    std::vector<char> leq_;
};

bool vicinal_leq(const Graph& g, Vertex u, Vertex v);

/// Maximal classes of equal open neighborhoods, singletons included, ordered by minimum.
std::vector<VertexSet> duplication_classes(const Graph& g);
/// Maximal classes of equal closed neighborhoods, singletons included, ordered by minimum.
std::vector<VertexSet> coduplication_classes(const Graph& g);

bool has_duplication(const Graph& g);
bool has_coduplication(const Graph& g);

struct DilworthReport {
    int dilworth = 0;
    /// Minimum chain cover; each chain is listed in ascending vicinal order.
    std::vector<VertexSet> chains;
    /// Maximum antichain, one representative per equivalence class, ascending.
    VertexSet antichain;
    std::vector<VertexSet> equivalence_classes;
    std::vector<VertexSet> duplication_classes;
    std::vector<VertexSet> coduplication_classes;
};

DilworthReport dilworth_number(const Graph& g);

/// Isolated/dominating vertex elimination.
bool is_threshold(const Graph& g);

enum class ThresholdShape {
    Leveled,              // fits the V_1..V_t / U_1..U_t scheme
    NotThreshold,
    Edgeless,
    HasIsolatedVertices,
    MissingCocliqueLevel, // e.g. K_n, or a last coclique level of size one
};

std::string to_string(ThresholdShape shape);

struct ThresholdStructure {
    /// V_1..V_t: coduplication classes forming the clique, by descending degree.
    std::vector<VertexSet> clique_classes;
    /// U_1..U_t: duplication classes with N(u) = V_1 u ... u V_i for u in U_i.
    std::vector<VertexSet> coclique_classes;

    int levels() const { return static_cast<int>(clique_classes.size()); }
};

class NotThreshold : public std::runtime_error {
public:
    NotThreshold() : std::runtime_error("graph is not a threshold graph") {}
};

class StructureViolation : public std::runtime_error {
public:
    StructureViolation(ThresholdShape shape, const std::string& what)
        : std::runtime_error(what), shape_(shape)
    {
    }
    ThresholdShape shape() const { return shape_; }

private:
    ThresholdShape shape_;
};

ThresholdShape threshold_shape(const Graph& g);

/// Throws NotThreshold, or StructureViolation when the shape is not Leveled.
ThresholdStructure threshold_structure(const Graph& g);

/// The chain cover of dilworth_number as sorted vertex sets; each induces a threshold graph.
std::vector<VertexSet> threshold_partition(const Graph& g);

nlohmann::json to_json(const DilworthReport& report);
nlohmann::json to_json(const ThresholdStructure& structure);

} // namespace cospec
