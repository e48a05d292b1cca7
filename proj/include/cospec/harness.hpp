#pragma once

#include "cospec/graph.hpp"
#include "cospec/linalg.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// Outcome of one executable check. holds == false implies a witness that
/// witness_confirms_violation() can re-check from the payload alone.
struct VerificationReport {
    std::string theorem_id;
    bool holds = false;
    nlohmann::json details = nlohmann::json::object();
    std::optional<nlohmann::json> witness;
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

class NonCographInCorpus : public std::invalid_argument {
public:
    explicit NonCographInCorpus(std::size_t index)
        : std::invalid_argument("corpus member " + std::to_string(index) + " is not a cograph"), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class BasisDeficit : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AllZeroCounts : public std::invalid_argument {
public:
    AllZeroCounts() : std::invalid_argument("generalized line graph counts are all zero") {}
};

/// Self-contained graph payload: JSON edge list plus graph6 when n <= 62.
nlohmann::json graph_payload(const Graph& g);

/// max multiplicity of eigenvalues other than 0, -1 versus the Dilworth number.
/// Non-cographs are evaluated too and flagged in details.
VerificationReport check_dilworth_bound(const Graph& g);

/// Throws NotThreshold.
VerificationReport check_threshold_simple(const Graph& g);

/// A graph with an isolated vertex counts as the degenerate zero-row case and holds.
VerificationReport check_drp(const Graph& g);
VerificationReport check_cdrp(const Graph& g);

enum class RoyleScope { Duplication, Coduplication, Both };

/// Duplicate-free members without isolated vertices have nonsingular A; coduplicate-free
/// members have nonsingular A + I. Throws NonCographInCorpus.
VerificationReport check_royle_lemmas(std::span<const Graph> corpus, RoyleScope scope = RoyleScope::Both);

/// Weight-two basis of the null space of A - shift I, shift in {0, -1}, built from
/// (co)duplication classes. Throws NotACograph, std::invalid_argument for a bad shift or
/// (shift 0) an isolated vertex, and BasisDeficit if the count misses the nullity.
std::vector<IntVector> weight_two_null_basis(const Graph& g, int shift);

/// mul(-2, L(H; a)) = m - n + sum a_i. Throws AllZeroCounts, or std::invalid_argument if H has no edge.
VerificationReport check_glg_multiplicity(const Graph& h, std::span<const int> counts);

/// G(s, k) for s >= 2: Dilworth number k, mult(-s) = k, equitable quotient with rank(Q + sI) = 2.
VerificationReport check_tightness(int s, int k);

/// K_{r_1..r_k} with distinct r_i > 1: Dilworth number k, every nonzero eigenvalue simple.
VerificationReport check_distinct_multipartite(std::span<const int> parts);

/// Recomputes the violation from the witness payload only.
bool witness_confirms_violation(const VerificationReport& report);

} // namespace cospec
