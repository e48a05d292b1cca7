#include "oracles.hpp"

#include "cospec/generators.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/hfree.hpp"
#include "cospec/linalg.hpp"
#include "cospec/vicinal.hpp"

#include <doctest.h>

#include <random>

using namespace cospec;

namespace {

Graph co_k3() { return empty_graph(3); }
Graph two_k2() { return disjoint_union(complete(2), complete(2)); }

SearchSpec spec_for(Graph h, RankProperty p, int max_n)
{
    SearchSpec s;
    s.forbidden = {std::move(h)};
    s.property = p;
    s.max_n = max_n;
    return s;
}

} // namespace

TEST_CASE("induced subgraph search")
{
    CHECK(contains_induced(path(5), path(4)) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(!contains_induced(cycle(5), complete(3)));
    CHECK(contains_induced(house_graph(), path(4)));
    CHECK(contains_induced(complete(3), Graph(0)) == std::vector<Vertex>{});
    CHECK(!contains_induced(complete(2), complete(3)));
    CHECK(is_free_of(house_graph(), path(5)));
    CHECK(is_free_of(house_graph(), two_k2()));
    CHECK(is_free_of(house_graph(), co_k3()));
}

TEST_CASE("induced search agrees with brute force and returns the least map")
{
    std::mt19937_64 rng(81);
    for (int t = 0; t < 400; ++t) {
        const Graph g = random_graph(1 + static_cast<int>(rng() % 6), rng());
        const Graph h = random_graph(1 + static_cast<int>(rng() % 4), rng());
        const auto map = contains_induced(g, h);
        REQUIRE(map.has_value() == oracle::induced_by_brute_force(g, h));
        if (!map)
            continue;
        for (int i = 0; i < h.order(); ++i)
            for (int j = 0; j < h.order(); ++j)
                if (i != j)
                    REQUIRE(g.adjacent((*map)[i], (*map)[j]) == h.adjacent(i, j));
        // no lexicographically smaller valid map
        std::vector<Vertex> best;
        std::vector<Vertex> cur(h.order());
        auto rec = [&](auto&& self, int i) -> void {
            if (!best.empty())
                return;
            if (i == h.order()) {
                best = cur;
                return;
            }
            for (Vertex c = 0; c < g.order(); ++c) {
                bool ok = std::find(cur.begin(), cur.begin() + i, c) == cur.begin() + i;
                for (int j = 0; j < i && ok; ++j)
                    ok = g.adjacent(c, cur[j]) == h.adjacent(i, j);
                if (ok) {
                    cur[i] = c;
                    self(self, i + 1);
                }
            }
        };
        rec(rec, 0);
        REQUIRE(best == *map);
    }
}

TEST_CASE("H-freeness is complement symmetric")
{
    std::mt19937_64 rng(82);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 6), rng());
        const Graph h = random_graph(2 + static_cast<int>(rng() % 3), rng());
        CHECK(is_free_of(g, h) == is_free_of(complement(g), complement(h)));
    }
}

TEST_CASE("canonical forms")
{
    for (int n = 0; n <= 5; ++n)
        CHECK(isomorphism_classes(n).size() == oracle::isomorphism_class_count(n));
    const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(isomorphism_classes(n).size() == known[n]);

    std::mt19937_64 rng(83);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(n, rng());
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        GraphBuilder b(n);
        for (auto [u, v] : g.edges())
            b.add_edge(perm[u], perm[v]);
        const Graph relabeled = std::move(b).build();
        REQUIRE(canonical_mask(g) == canonical_mask(relabeled));
        REQUIRE(isomorphic(g, relabeled));
        const auto& reps = isomorphism_classes(n);
        REQUIRE(std::binary_search(reps.begin(), reps.end(), canonical_mask(g)));
    }
    CHECK(!isomorphic(path(4), star(4)));
    CHECK(isomorphic(complement(path(4)), path(4)));
    CHECK(isomorphic(complement(path(5)), house_graph()));
}

TEST_CASE("enumeration")
{
    const auto e3 = enumerate_graphs(3);
    CHECK(e3.size() == 8);
    CHECK(enumerate_graphs(3, true).size() == 4);
    CHECK(enumerate_graphs(4, true).size() == 11);
    std::uint64_t i = 0;
    for (const Graph& g : e3)
        CHECK(pair_mask(g) == i++);
    CHECK(i == 8);

    const auto e5 = enumerate_graphs(5, true);
    std::vector<std::uint64_t> tail;
    for (auto it = e5.begin_at(30); it != e5.end(); ++it)
        tail.push_back(pair_mask(*it));
    CHECK(tail.size() == 4);
    CHECK(tail.front() == e5.mask_at(30));
    CHECK(std::is_sorted(isomorphism_classes(6).begin(), isomorphism_classes(6).end()));

    CHECK_THROWS_AS(enumerate_graphs(11), EnumerationTooLarge);
    CHECK_THROWS_AS(enumerate_graphs(9, true), EnumerationTooLarge);
    CHECK_THROWS_AS(e3.mask_at(8), std::out_of_range);
}

TEST_CASE("counterexample search reproduces the known witnesses")
{
    const auto k3 = find_counterexample(spec_for(complete(3), RankProperty::DRP, 5));
    REQUIRE(k3);
    CHECK(isomorphic(k3->graph, path(5)));
    CHECK(witness_confirms_violation(k3->report));

    const auto house = find_counterexample(spec_for(co_k3(), RankProperty::DRP, 5));
    REQUIRE(house);
    CHECK(house->graph.edge_count() == 6);
    CHECK(isomorphic(house->graph, house_graph()));

    const auto fig4 = find_counterexample(spec_for(co_k3(), RankProperty::CDRP, 6));
    REQUIRE(fig4);
    CHECK(fig4->graph.order() == 6);
    CHECK(!fig4->report.holds);

    const Graph f4 = figure4_graph();
    CHECK(f4.order() == 6);
    CHECK(is_free_of(f4, co_k3()));
    CHECK(is_free_of(f4, two_k2()));
    CHECK(!has_coduplication(f4));
    CHECK(integer_eigenvalue_multiplicity(f4, -1) > 0);

    CHECK(!find_counterexample(spec_for(path(4), RankProperty::DRP, 7)));
    CHECK(!find_counterexample(spec_for(path(4), RankProperty::CDRP, 7)));
}

TEST_CASE("the searched CDRP witness matches the drawn six-vertex graph")
{
    // top 0, bottom 1, then the collinear vertices read as the path 5-3-2-4
    const Graph drawn = Graph::from_edge_list(
        6, {{0, 1}, {5, 3}, {3, 2}, {2, 4}, {0, 5}, {5, 1}, {4, 1}, {0, 4}, {0, 2}, {2, 1}, {1, 3}});
    const std::vector<long> x{1, -1, 1, 0, -1, 0};
    CHECK(verify_eigenvector(drawn, -1, std::span<const long>(x)));
    CHECK(isomorphic(drawn, figure4_graph()));
}

TEST_CASE("DRP counterexamples have no weight-two null vector")
{
    for (const Graph& h : {complete(3), co_k3(), two_k2(), cycle(4), cycle(5)}) {
        auto spec = spec_for(h, RankProperty::DRP, 6);
        spec.iso_reduce = true;
        const auto hit = find_counterexample(spec);
        REQUIRE(hit);
        const Graph& g = hit->graph;
        CHECK(integer_eigenvalue_multiplicity(g, 0) > 0);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                CHECK(!oracle::weight_two_null(g, 0, u, v));
    }
}

TEST_CASE("search results do not depend on the thread count")
{
    for (auto prop : {RankProperty::DRP, RankProperty::CDRP}) {
        auto spec = spec_for(two_k2(), prop, 6);
        const auto one = find_counterexample(spec);
        spec.jobs = 3;
        const auto three = find_counterexample(spec);
        REQUIRE(one);
        REQUIRE(three);
        CHECK(one->graph == three->graph);
        CHECK(one->index == three->index);
    }
    auto sampled = spec_for(complete(3), RankProperty::DRP, 7);
    sampled.mode = SearchMode::Sampled;
    sampled.count = 3000;
    sampled.seed = 5;
    const auto a = find_counterexample(sampled);
    sampled.jobs = 2;
    const auto b = find_counterexample(sampled);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->graph == b->graph);
}

TEST_CASE("search spec validation")
{
    auto s = spec_for(complete(3), RankProperty::DRP, 11);
    CHECK_THROWS_AS(find_counterexample(s), InvalidSearchSpec);
    s.max_n = 9;
    s.iso_reduce = true;
    CHECK_THROWS_AS(find_counterexample(s), InvalidSearchSpec);
    s.iso_reduce = false;
    s.mode = SearchMode::Sampled;
    CHECK_THROWS_AS(find_counterexample(s), InvalidSearchSpec);
    s.forbidden.clear();
    s.seed = 1;
    CHECK_THROWS_AS(find_counterexample(s), InvalidSearchSpec);
}

TEST_CASE("P4 characterises the H-free families with DRP and CDRP at desk scale")
{
    const auto r = verify_theorem_4_3(6);
    CHECK(r.holds);
    CHECK(!r.witness);
    const auto& entries = r.details["entries"];
    CHECK(entries.size() == 2 * 19);
    int found = 0;
    for (const auto& e : entries) {
        CHECK(e["expectCounterexample"] == !e["inducedInP4"].get<bool>());
        if (!e["found"].is_null()) {
            ++found;
            CHECK(e["order"].get<int>() <= 6);
        }
    }
    CHECK(found == 2 * (19 - 6));

    VerificationReport fake = r;
    fake.holds = false;
    nlohmann::json entry = entries[0];
    fake.witness = nlohmann::json{{"failures", nlohmann::json::array({entry})}};
    CHECK(!witness_confirms_violation(fake));
}
