#include "cospec/hfree.hpp"

#include "cospec/generators.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/vicinal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace cospec {

using nlohmann::json;

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> map;
    std::vector<char> used;
    std::vector<int> gdeg, hdeg;

    bool extend(int i)
    {
        if (i == h.order())
            return true;
        const int ng = g.order();
        const int nh = h.order();
        for (Vertex c = 0; c < ng; ++c) {
            if (used[c] || gdeg[c] < hdeg[i] || (ng - 1 - gdeg[c]) < (nh - 1 - hdeg[i]))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = g.adjacent(c, map[j]) == h.adjacent(i, j);
            if (!ok)
                continue;
            map[i] = c;
            used[c] = 1;
            if (extend(i + 1))
                return true;
            used[c] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h)
{
    if (h.order() > g.order())
        return std::nullopt;
    InducedSearch s{g, h, std::vector<Vertex>(h.order()), std::vector<char>(g.order()), {}, {}};
    for (Vertex v = 0; v < g.order(); ++v)
        s.gdeg.push_back(g.degree(v));
    for (Vertex v = 0; v < h.order(); ++v)
        s.hdeg.push_back(h.degree(v));
    if (!s.extend(0))
        return std::nullopt;
    return s.map;
}

namespace {

/// Stable colouring by iterated degree refinement. Colour values only depend on the
/// isomorphism type of (g, v).
std::vector<int> refined_colours(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(n);
    for (Vertex v = 0; v < n; ++v)
        colour[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (Vertex u = 0; u < n; ++u)
                if (g.adjacent(u, v))
                    nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (static_cast<int>(distinct.size()) == classes)
            return colour;
        classes = static_cast<int>(distinct.size());
    }
}

struct CanonSearch {
    std::vector<Edge> edges;
    std::vector<Vertex> order; // vertex at each position
    std::vector<std::pair<int, int>> cells;
    std::vector<int> pos;
    std::uint64_t best = ~std::uint64_t{0};

    void leaf()
    {
        for (std::size_t p = 0; p < order.size(); ++p)
            pos[order[p]] = static_cast<int>(p);
        std::uint64_t m = 0;
        for (auto [u, v] : edges) {
            const int a = std::min(pos[u], pos[v]);
            const int b = std::max(pos[u], pos[v]);
            m |= std::uint64_t{1} << pair_index(a, b);
        }
        best = std::min(best, m);
    }

    void run(std::size_t c)
    {
        if (c == cells.size()) {
            leaf();
            return;
        }
        auto first = order.begin() + cells[c].first;
        auto last = order.begin() + cells[c].second;
        std::sort(first, last);
        do {
            run(c + 1);
        } while (std::next_permutation(first, last));
    }
};

} // namespace

std::uint64_t canonical_mask(const Graph& g)
{
    const int n = g.order();
    if (n > 11)
        throw GraphError("canonical form limited to n <= 11");
    const auto colour = refined_colours(g);
    CanonSearch s;
    s.edges = g.edges();
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[s.order[j]] == colour[s.order[i]])
            ++j;
        s.cells.emplace_back(i, j);
        i = j;
    }
    s.pos.resize(n);
    if (n == 0)
        return 0;
    s.run(0);
    return s.best;
}

Graph canonical_form(const Graph& g) { return from_pair_mask(g.order(), canonical_mask(g)); }

bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_mask(a) == canonical_mask(b);
}

const std::vector<std::uint64_t>& isomorphism_classes(int n)
{
    if (n < 0 || n > 8)
        throw EnumerationTooLarge("isomorphism-reduced enumeration limited to 0 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<std::uint64_t>> cache;
    std::lock_guard lock(mu);
    if (cache.empty())
        cache[0] = {0};
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        const auto& prev = cache[m - 1];
        const int shift = (m - 1) * (m - 2) / 2;
        std::set<std::uint64_t> reps;
        for (std::uint64_t base : prev)
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb)
                reps.insert(canonical_mask(from_pair_mask(m, base | (nb << shift))));
        cache[m] = std::vector<std::uint64_t>(reps.begin(), reps.end());
    }
    return cache[n];
}

GraphEnumeration::GraphEnumeration(int n, bool iso_reduce) : n_(n), iso_(iso_reduce)
{
    if (n < 0)
        throw EnumerationTooLarge("vertex count must be non-negative");
    if (iso_reduce) {
        reps_ = &isomorphism_classes(n);
        size_ = reps_->size();
    } else {
        if (n > 10)
            throw EnumerationTooLarge("labeled enumeration limited to n <= 10");
        size_ = std::uint64_t{1} << (n * (n - 1) / 2);
    }
}

std::uint64_t GraphEnumeration::mask_at(std::uint64_t index) const
{
    if (index >= size_)
        throw std::out_of_range("enumeration index out of range");
    return iso_ ? (*reps_)[index] : index;
}

GraphEnumeration enumerate_graphs(int n, bool iso_reduce) { return GraphEnumeration(n, iso_reduce); }

const char* to_string(RankProperty p) { return p == RankProperty::DRP ? "drp" : "cdrp"; }
const char* to_string(SearchMode m) { return m == SearchMode::Exhaustive ? "exhaustive" : "sampled"; }

void validate(const SearchSpec& spec)
{
    if (spec.forbidden.empty())
        throw InvalidSearchSpec("at least one forbidden graph is required");
    if (spec.max_n < 1)
        throw InvalidSearchSpec("max_n must be at least 1");
    if (spec.jobs < 1)
        throw InvalidSearchSpec("jobs must be at least 1");
    if (spec.mode == SearchMode::Exhaustive) {
        if (spec.max_n > 10)
            throw InvalidSearchSpec("exhaustive search limited to max_n <= 10");
        if (spec.iso_reduce && spec.max_n > 8)
            throw InvalidSearchSpec("isomorphism-reduced search limited to max_n <= 8");
    } else {
        if (!spec.seed)
            throw InvalidSearchSpec("sampled search requires an explicit seed");
        if (spec.count == 0)
            throw InvalidSearchSpec("sampled search needs count >= 1");
    }
}

namespace {

bool has_isolated_vertex(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

bool violates(const Graph& g, const SearchSpec& spec)
{
    if (spec.property == RankProperty::DRP) {
        if (has_duplication(g) || has_isolated_vertex(g))
            return false;
    } else if (has_coduplication(g)) {
        return false;
    }
    for (const Graph& h : spec.forbidden)
        if (contains_induced(g, h))
            return false;
    IntMatrix a = adjacency_matrix(g);
    if (spec.property == RankProperty::CDRP)
        a = a.shifted(1);
    return rank(a) < g.order();
}

/// Least index in [0, total) satisfying pred, scanning chunks on `jobs` threads.
template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t total, int jobs, Pred pred)
{
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < total; ++i)
            if (pred(i))
                return i;
        return std::nullopt;
    }
    constexpr std::uint64_t chunk = 2048;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{total};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            while (true) {
                const std::uint64_t start = next.fetch_add(chunk);
                if (start >= total || start >= best.load())
                    return;
                const std::uint64_t stop = std::min(total, start + chunk);
                for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
                    if (pred(i)) {
                        std::uint64_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mu);
            error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    if (best.load() < total)
        return best.load();
    return std::nullopt;
}

} // namespace

std::optional<Counterexample> find_counterexample(const SearchSpec& spec)
{
    validate(spec);
    for (int n = 1; n <= spec.max_n; ++n) {
        std::optional<std::uint64_t> hit;
        Graph found;
        if (spec.mode == SearchMode::Exhaustive) {
            const GraphEnumeration e(n, spec.iso_reduce);
            hit = first_index(e.size(), spec.jobs, [&](std::uint64_t i) { return violates(e.at(i), spec); });
            if (hit)
                found = e.at(*hit);
        } else {
            std::mt19937_64 rng(*spec.seed + static_cast<std::uint64_t>(n));
            std::vector<std::uint64_t> seeds(spec.count);
            for (auto& s : seeds)
                s = rng();
            hit = first_index(spec.count, spec.jobs,
                              [&](std::uint64_t i) { return violates(random_graph(n, seeds[i]), spec); });
            if (hit)
                found = random_graph(n, seeds[*hit]);
        }
        if (!hit)
            continue;

        VerificationReport report = spec.property == RankProperty::DRP ? check_drp(found) : check_cdrp(found);
        if (report.holds || !witness_confirms_violation(report))
            throw InternalCheckFailure("search hit does not re-verify as a violation");
        json forbidden = json::array();
        for (const Graph& h : spec.forbidden)
            forbidden.push_back(graph_payload(h));
        report.details["forbidden"] = forbidden;
        report.details["mode"] = to_string(spec.mode);
        report.details["isoReduce"] = spec.iso_reduce;
        report.details["enumerationIndex"] = *hit;
        return Counterexample{std::move(found), std::move(report), *hit};
    }
    return std::nullopt;
}

json to_json(const Counterexample& c)
{
    return {{"graph", graph_payload(c.graph)}, {"index", c.index}, {"report", to_json(c.report)}};
}

namespace {

Graph c5() { return cycle(5); }

json run_entry(const Graph& h, RankProperty prop, int max_n, int jobs, bool expect_found, bool& consistent)
{
    SearchSpec spec;
    spec.forbidden = {h};
    spec.property = prop;
    spec.max_n = max_n;
    spec.iso_reduce = true;
    spec.jobs = jobs;
    const auto hit = find_counterexample(spec);
    consistent = hit.has_value() == expect_found;
    json entry = {
        {"forbidden", graph_payload(h)},
        {"property", to_string(prop)},
        {"maxN", max_n},
        {"expectCounterexample", expect_found},
        {"found", hit ? graph_payload(hit->graph) : json(nullptr)},
    };
    if (hit)
        entry["order"] = hit->graph.order();
    return entry;
}

} // namespace

VerificationReport verify_theorem_4_3(int max_n, int jobs)
{
    if (max_n < 1 || max_n > 8)
        throw InvalidSearchSpec("theorem-4-3 check needs 1 <= max_n <= 8");
    const Graph p4 = path(4);
    std::vector<Graph> hs;
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t m : isomorphism_classes(k))
            hs.push_back(from_pair_mask(k, m));
    hs.push_back(c5());

    VerificationReport r{"theorem-4-3", true, json::object(), std::nullopt};
    json entries = json::array();
    json failures = json::array();
    int witnesses = 0;
    for (const Graph& h : hs) {
        const bool in_p4 = contains_induced(p4, h).has_value();
        for (RankProperty prop : {RankProperty::DRP, RankProperty::CDRP}) {
            bool ok = true;
            json e = run_entry(h, prop, max_n, jobs, !in_p4, ok);
            e["inducedInP4"] = in_p4;
            if (!e["found"].is_null())
                ++witnesses;
            if (!ok) {
                r.holds = false;
                failures.push_back(e);
            }
            entries.push_back(std::move(e));
        }
    }
    r.details = {{"maxN", max_n}, {"forbiddenCount", hs.size()}, {"witnessCount", witnesses}, {"entries", entries}};
    if (!r.holds)
        r.witness = json{{"failures", failures}};
    return r;
}

bool theorem_4_3_witness_confirms(const json& witness)
{
    const auto& failures = witness.at("failures");
    if (failures.empty())
        return false;
    const Graph p4 = path(4);
    for (const auto& f : failures) {
        const Graph h = graph_from_json(f.at("forbidden").at("json"));
        const bool in_p4 = contains_induced(p4, h).has_value();
        if (in_p4 == f.at("expectCounterexample").get<bool>())
            return false;
        const RankProperty prop = f.at("property") == "drp" ? RankProperty::DRP : RankProperty::CDRP;
        // a failure is either an unexpected hit or a missing expected one
        if (f.at("found").is_null() == in_p4)
            return false;
        if (!f.at("found").is_null()) {
            const Graph g = graph_from_json(f.at("found").at("json"));
            const auto rep = prop == RankProperty::DRP ? check_drp(g) : check_cdrp(g);
            if (rep.holds || contains_induced(g, h))
                return false;
        } else {
            SearchSpec spec;
            spec.forbidden = {h};
            spec.property = prop;
            spec.max_n = f.at("maxN").get<int>();
            spec.iso_reduce = true;
            if (find_counterexample(spec))
                return false;
        }
    }
    return true;
}

Graph figure4_graph()
{
    SearchSpec spec;
    spec.forbidden = {complement(complete(3)), disjoint_union(complete(2), complete(2))};
    spec.property = RankProperty::CDRP;
    spec.max_n = 6;
    spec.iso_reduce = true;
    const auto hit = find_counterexample(spec);
    if (!hit)
        throw InternalCheckFailure("no {co-K3, 2K2}-free CDRP violator on 6 vertices");
    return hit->graph;
}

} // namespace cospec
