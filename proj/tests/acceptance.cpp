// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if a criterion
// fails, unless the failure is listed in `unattainable` and reproduces exactly as analysed.

#include "oracles.hpp"

#include "cospec/cograph.hpp"
#include "cospec/generators.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/harness.hpp"
#include "cospec/hfree.hpp"
#include "cospec/linalg.hpp"
#include "cospec/vicinal.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cospec;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    /// Set when the only failing sub-check is a documented, reproduced impossibility.
    bool known_unattainable = false;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

bool isolated_vertex(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

Outcome dilworth_values()
{
    Outcome o;
    o.require(dilworth_number(path(4)).dilworth == 2, "dilworth(P4) != 2");
    o.require(dilworth_number(cycle(5)).dilworth == 5, "dilworth(C5) != 5");
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = threshold_from_sequence(CreationSequence::random(1 + static_cast<int>(seed % 20), seed));
        o.require(dilworth_number(g).dilworth == 1, "random threshold graph with dilworth != 1");
    }
    std::uint64_t checked = 0;
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t m = 0; m < labeled_count(n); ++m) {
            const Graph g = from_pair_mask(n, m);
            o.require(dilworth_number(g).dilworth == dilworth_number(complement(g)).dilworth,
                      "dilworth(G) != dilworth(complement) for " + to_graph6(g));
            ++checked;
        }
    o.note = o.pass ? std::to_string(checked) + " labeled graphs on <= 6 vertices" : o.note;
    return o;
}

Outcome dilworth_bound_suite()
{
    Outcome o;
    int cographs = 0;
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t mask : isomorphism_classes(n)) {
            const Graph g = from_pair_mask(n, mask);
            if (!is_cograph(g))
                continue;
            ++cographs;
            const auto prof = multiplicity_profile(g);
            o.require(prof.max_other_mult <= dilworth_number(g).dilworth, "bound fails on " + to_graph6(g));
        }
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = random_cograph(1 + static_cast<int>(rng() % 14), rng());
        const auto r = check_dilworth_bound(g);
        o.require(r.holds, "bound fails on random cograph " + to_graph6(g));
    }
    if (o.pass)
        o.note = std::to_string(cographs) + " cographs on <= 8 vertices up to isomorphism, 1000 random (n <= 14)";
    return o;
}

Outcome tightness()
{
    Outcome o;
    for (int s = 2; s <= 3; ++s)
        for (int k = 1; k <= 4; ++k) {
            const auto r = check_tightness(s, k);
            const std::string tag = "(" + std::to_string(s) + "," + std::to_string(k) + ")";
            o.require(r.details["multiplicity"] == k, "mult(-s) != k at " + tag);
            o.require(r.details["dilworth"] == k, "dilworth != k at " + tag);
            o.require(r.details["rankQPlusSI"] == 2, "rank(Q+sI) != 2 at " + tag);
            o.require(r.holds, "tightness check fails at " + tag);
        }
    if (o.pass)
        o.note = "(s,k) in {2,3}x{1..4}";
    return o;
}

Outcome glg_counterexample()
{
    Outcome o;
    std::ostringstream note;
    for (int k = 2; k <= 4; ++k) {
        std::vector<int> counts(k + 1, 1);
        counts[0] = k;
        const Graph g = generalized_line_graph(star(k + 1), counts);
        const int dil = dilworth_number(g).dilworth;
        const int mult = integer_eigenvalue_multiplicity(g, -2);
        o.require(dil == k, "dilworth(G(k)) != k for k=" + std::to_string(k));
        o.require(mult == 2 * k - 1, "mult(-2) != 2k-1 for k=" + std::to_string(k));
        const auto r = check_dilworth_bound(g);
        o.require(!r.holds && witness_confirms_violation(r), "bound violation not reported for k=" + std::to_string(k));
        note << (k > 2 ? "; " : "") << "k=" << k << ": dilworth " << dil << ", mult(-2) " << mult;
    }
    if (o.pass)
        o.note = note.str();
    return o;
}

Outcome threshold_simple()
{
    Outcome o;
    int exhaustive = 0;
    for (int n = 1; n <= 8; ++n) {
        // every threshold graph on n vertices is some creation sequence starting with 'i'
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
            CreationSequence seq;
            seq.steps.push_back(CreationStep::Isolated);
            for (int i = 0; i < n - 1; ++i)
                seq.steps.push_back((bits >> i & 1U) ? CreationStep::Dominating : CreationStep::Isolated);
            o.require(check_threshold_simple(threshold_from_sequence(seq)).holds, "non-simple eigenvalue");
            ++exhaustive;
        }
        // cross-check: the threshold classes among all graphs are exactly 2^(n-1)
        std::size_t classes = 0;
        for (std::uint64_t mask : isomorphism_classes(n)) {
            const Graph g = from_pair_mask(n, mask);
            if (is_threshold(g)) {
                ++classes;
                o.require(check_threshold_simple(g).holds, "non-simple eigenvalue on " + to_graph6(g));
            }
        }
        o.require(classes == (std::size_t{1} << (n - 1)), "threshold class count mismatch at n=" + std::to_string(n));
    }
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Graph g = threshold_from_sequence(CreationSequence::random(1 + static_cast<int>(seed % 30), seed + 1000));
        o.require(check_threshold_simple(g).holds, "non-simple eigenvalue on random threshold graph");
    }
    if (o.pass)
        o.note = std::to_string(exhaustive) + " creation sequences (all classes, n <= 8) + 500 random";
    return o;
}

Outcome royle_and_weight_two()
{
    Outcome o;
    std::mt19937_64 rng(4242);
    int dup_free = 0, codup_free = 0, bases = 0, skipped_isolated = 0;
    std::vector<Graph> corpus;
    for (int t = 0; t < 1000; ++t) {
        const Graph g = random_cograph(1 + static_cast<int>(rng() % 14), rng());
        corpus.push_back(g);
        const int n = g.order();
        if (!has_duplication(g) && !isolated_vertex(g)) {
            ++dup_free;
            o.require(rank(adjacency_matrix(g)) == n, "duplicate-free cograph with singular A: " + to_graph6(g));
        }
        if (!has_coduplication(g)) {
            ++codup_free;
            o.require(rank(adjacency_matrix(g).shifted(1)) == n,
                      "coduplicate-free cograph with singular A+I: " + to_graph6(g));
        }
        for (int shift : {0, -1}) {
            if (shift == 0 && isolated_vertex(g)) {
                ++skipped_isolated;
                continue;
            }
            try {
                const auto basis = weight_two_null_basis(g, shift);
                ++bases;
                o.require(static_cast<int>(basis.size()) == integer_eigenvalue_multiplicity(g, shift),
                          "basis size != nullity");
                if (!basis.empty())
                    o.require(rank(IntMatrix::from_rows(std::span<const IntVector>(basis))) ==
                                  static_cast<int>(basis.size()),
                              "weight-two vectors dependent");
            } catch (const BasisDeficit& e) {
                o.require(false, std::string("basis deficit: ") + e.what() + " on " + to_graph6(g));
            }
        }
    }
    const auto r = check_royle_lemmas(corpus);
    o.require(r.holds, "check_royle_lemmas reports a violation");
    o.require(r.details["distinctNonzeroRowsRankViolations"] == 0, "rank != number of distinct nonzero rows");
    if (o.pass)
        o.note = std::to_string(dup_free) + " duplicate-free, " + std::to_string(codup_free) +
                 " coduplicate-free, " + std::to_string(bases) + " bases (" + std::to_string(skipped_isolated) +
                 " shift-0 cases with isolated vertices use the zero-row convention)";
    return o;
}

Outcome theorem_4_3()
{
    Outcome o;
    auto search = [](const Graph& h, RankProperty p, int max_n) {
        SearchSpec s;
        s.forbidden = {h};
        s.property = p;
        s.max_n = max_n;
        return find_counterexample(s);
    };
    const std::vector<std::pair<std::string, Graph>> bad{
        {"K3", complete(3)},
        {"co-K3", empty_graph(3)},
        {"2K2", disjoint_union(complete(2), complete(2))},
        {"K22", cycle(4)},
        {"C5", cycle(5)},
    };
    for (const auto& [name, h] : bad) {
        const auto drp = search(h, RankProperty::DRP, 5);
        const auto cdrp = search(h, RankProperty::CDRP, 6);
        o.require(drp && witness_confirms_violation(drp->report), "no DRP counterexample for " + name);
        o.require(cdrp && witness_confirms_violation(cdrp->report), "no CDRP counterexample for " + name);
        if (name == "K3" && drp)
            o.require(isomorphic(drp->graph, path(5)), "K3 witness is not P5");
        if (name == "co-K3" && drp)
            o.require(isomorphic(drp->graph, house_graph()), "co-K3 witness is not the house");
    }
    const Graph p4 = path(4);
    int good = 0;
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t mask : isomorphism_classes(k)) {
            const Graph h = from_pair_mask(k, mask);
            if (!contains_induced(p4, h))
                continue;
            ++good;
            o.require(!search(h, RankProperty::DRP, 7), "DRP counterexample in F(" + to_graph6(h) + ")");
            o.require(!search(h, RankProperty::CDRP, 7), "CDRP counterexample in F(" + to_graph6(h) + ")");
        }
    o.require(good == 6, "expected 6 induced subgraphs of P4");
    if (o.pass)
        o.note = "5 forbidden graphs with witnesses; " + std::to_string(good) +
                 " induced subgraphs of P4 clean up to n=7 (labeled exhaustive)";
    return o;
}

Outcome figure_eigenvectors()
{
    Outcome o;
    const std::vector<long> p5_zero{1, 0, -1, 0, 1};
    const std::vector<long> p5_minus1{1, -1, 0, -1, 1};
    const std::vector<long> house_zero{0, -1, 1, -1, 1};
    const bool a = verify_eigenvector(path(5), 0, std::span<const long>(p5_zero));
    const bool b = verify_eigenvector(path(5), -1, std::span<const long>(p5_minus1));
    const bool c = verify_eigenvector(house_graph(), 0, std::span<const long>(house_zero));
    o.require(a, "P5 0-eigenvector fails");
    o.require(c, "house 0-eigenvector fails");
    o.require(b, "P5 (1,-1,0,-1,1) is not a -1-eigenvector: at vertex 2, -1*0 != x1+x3 = -2");

    // Reproduce the analysis behind the failure: the middle vertex breaks the sum rule,
    // and the sign-corrected vector is a genuine -1-eigenvector.
    const std::vector<long> corrected{1, -1, 0, 1, -1};
    const bool residual_at_middle = p5_minus1[1] + p5_minus1[3] == -2 && p5_minus1[2] == 0;
    const bool corrected_ok = verify_eigenvector(path(5), -1, std::span<const long>(corrected));
    const bool cdrp_fails = !check_cdrp(path(5)).holds;
    if (a && c && !b && residual_at_middle && corrected_ok && cdrp_fails) {
        o.known_unattainable = true;
        o.note += "; (1,-1,0,1,-1) verifies, so P5 does fail CDRP";
    }
    if (o.pass)
        o.note = "all three vectors satisfy the sum rule";
    return o;
}

Outcome linalg_oracles()
{
    Outcome o;
    int polys = 0;
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t m = 0; m < labeled_count(n); ++m) {
            const Graph g = from_pair_mask(n, m);
            std::vector<BigInt> coeffs;
            for (long v : oracle::cofactor_char_poly(g))
                coeffs.emplace_back(v);
            o.require(char_poly(adjacency_matrix(g)) == IntPolynomial(std::move(coeffs)),
                      "Berkowitz != cofactor on " + to_graph6(g));
            ++polys;
        }
    std::mt19937_64 rng(909);
    for (int t = 0; t < 500; ++t) {
        const int rows = 1 + static_cast<int>(rng() % 8);
        const int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<long>> plain(rows, std::vector<long>(cols));
        for (auto& row : plain)
            for (auto& v : row)
                v = static_cast<long>(rng() % 19) - 9;
        if (t % 4 == 0 && rows > 2)
            for (int c = 0; c < cols; ++c)
                plain[rows - 1][c] = plain[0][c] + 3 * plain[1][c];
        o.require(rank(IntMatrix::from_rows(plain)) == oracle::rational_rank(plain), "Bareiss rank mismatch");
    }
    for (int t = 0; t < 500; ++t) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, rng());
        const auto p = char_poly(adjacency_matrix(g));
        o.require(p.coeff(n - 1) == 0, "trace coefficient nonzero");
        o.require(p.coeff(n - 2) == -static_cast<long>(g.edge_count()), "x^(n-2) coefficient != -|E|");
        o.require(p.coeff(n - 3) == -2 * oracle::triangle_count(g), "x^(n-3) coefficient != -2 triangles");
    }
    if (o.pass)
        o.note = std::to_string(polys) + " char polys, 500 ranks, 500 coefficient identities";
    return o;
}

Outcome graph6_codec()
{
    Outcome o;
    int cases = 0;
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t m = 0; m < labeled_count(n); ++m) {
            const Graph g = from_pair_mask(n, m);
            const std::string s = to_graph6(g);
            o.require(from_graph6(s) == g, "round trip fails");
            // bit-packing definition, computed independently
            std::string expect(1, static_cast<char>(n + 63));
            const int bits = n * (n - 1) / 2;
            for (int start = 0; start < bits; start += 6) {
                int v = 0;
                for (int b = 0; b < 6; ++b) {
                    const int k = start + b;
                    v = v * 2 + (k < bits ? static_cast<int>(m >> k & 1U) : 0);
                }
                expect.push_back(static_cast<char>(v + 63));
            }
            o.require(s == expect, "encoding differs from the packing definition");
            ++cases;
        }
    o.require(to_graph6(complete(3)) == "Bw", "K3 != Bw");
    o.require(to_graph6(path(5)) == "DhC", "P5 != DhC");
    o.require(to_graph6(complete(4)) == "C~", "K4 != C~");
    o.require(to_graph6(Graph(0)) == "?", "K0 != ?");
    if (o.pass)
        o.note = std::to_string(cases) + " graphs round-trip; K3 -> Bw";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"Dilworth values", dilworth_values},
        {"Dilworth bound on cographs", dilworth_bound_suite},
        {"Tightness family", tightness},
        {"Generalized line graph counterexample", glg_counterexample},
        {"Threshold eigenvalues simple", threshold_simple},
        {"Royle lemmas and weight-two bases", royle_and_weight_two},
        {"H-free counterexample search", theorem_4_3},
        {"Figure eigenvectors", figure_eigenvectors},
        {"Exact linear algebra oracles", linalg_oracles},
        {"graph6 codec", graph6_codec},
    };
    int passed = 0, unattainable = 0, failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu  %-40s %7.2fs  %s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                    o.note.c_str(), !o.pass && o.known_unattainable ? " [known unattainable]" : "");
        std::fflush(stdout);
        if (o.pass)
            ++passed;
        else if (o.known_unattainable)
            ++unattainable;
        else
            ++failed;
    }
    std::printf("%d passed, %d failed, %d known unattainable\n", passed, failed, unattainable);
    return failed == 0 ? 0 : 1;
}
