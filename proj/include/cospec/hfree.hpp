#pragma once

#include "cospec/graph.hpp"
#include "cospec/harness.hpp"

#include <json.hpp>

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cospec {

/// Injective map V(H) -> V(G) preserving adjacency and non-adjacency; the
/// lexicographically least one (compared as the sequence map[0], map[1], ...).
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h);
inline bool is_free_of(const Graph& g, const Graph& h) { return !contains_induced(g, h); }

/// Pair mask of a canonical relabeling. Isomorphic graphs give equal masks.
/// Minimum over the relabelings that respect a degree-refined colour partition. n <= 11.
std::uint64_t canonical_mask(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

class EnumerationTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All labeled graphs on n vertices (n <= 10) in ascending pair-mask order, or with
/// iso_reduce the canonical representatives (n <= 8), also ascending. Random access,
/// so a run can restart from any index.
class GraphEnumeration {
public:
    GraphEnumeration(int n, bool iso_reduce);

    int order() const { return n_; }
    bool iso_reduced() const { return iso_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t mask_at(std::uint64_t index) const;
    Graph at(std::uint64_t index) const { return from_pair_mask(n_, mask_at(index)); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator(const GraphEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
        Graph operator*() const { return e_->at(i_); }
        iterator& operator++()
        {
            ++i_;
            return *this;
        }
        bool operator==(const iterator& o) const { return i_ == o.i_; }
        std::uint64_t index() const { return i_; }

    private:
        const GraphEnumeration* e_;
        std::uint64_t i_;
    };

    iterator begin() const { return {this, 0}; }
    iterator begin_at(std::uint64_t index) const { return {this, index < size_ ? index : size_}; }
    iterator end() const { return {this, size_}; }

private:
    int n_;
    bool iso_;
    std::uint64_t size_;
    const std::vector<std::uint64_t>* reps_ = nullptr;
};

GraphEnumeration enumerate_graphs(int n, bool iso_reduce = false);

/// Canonical masks of all graphs on n <= 8 vertices up to isomorphism, ascending. Cached.
const std::vector<std::uint64_t>& isomorphism_classes(int n);

enum class RankProperty { DRP, CDRP };
enum class SearchMode { Exhaustive, Sampled };

const char* to_string(RankProperty p);
const char* to_string(SearchMode m);

class InvalidSearchSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Searches F(H_1, ..., H_r), the graphs containing none of `forbidden` as an induced subgraph.
struct SearchSpec {
    std::vector<Graph> forbidden;
    RankProperty property = RankProperty::DRP;
    int max_n = 6;
    SearchMode mode = SearchMode::Exhaustive;
    /// Sampled mode: draws per vertex count.
    std::uint64_t count = 1000;
    std::optional<std::uint64_t> seed;
    bool iso_reduce = false;
    int jobs = 1;
};

void validate(const SearchSpec& spec);

struct Counterexample {
    Graph graph;
    VerificationReport report;
    /// Position in the enumeration (or draw number in sampled mode) for graph.order().
    std::uint64_t index = 0;
};

/// First member of the family violating the property: least vertex count, then least
/// enumeration index. Results do not depend on spec.jobs. Throws InvalidSearchSpec.
std::optional<Counterexample> find_counterexample(const SearchSpec& spec);

nlohmann::json to_json(const Counterexample& c);

/// Every H on at most 4 vertices up to isomorphism, plus C5: H not induced in P4 must have
/// DRP and CDRP counterexamples within max_n; H induced in P4 must have none.
/// Uses the isomorphism-reduced enumeration; max_n <= 8.
VerificationReport verify_theorem_4_3(int max_n, int jobs = 1);

/// Re-runs every failure listed in a theorem-4-3 witness.
bool theorem_4_3_witness_confirms(const nlohmann::json& witness);

/// Canonical least {co-K3, 2K2}-free graph violating CDRP.
Graph figure4_graph();

} // namespace cospec
