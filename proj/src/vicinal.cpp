#include "cospec/vicinal.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace cospec {

PreorderRelation::PreorderRelation(const Graph& g) : n_(g.order()), leq_(static_cast<std::size_t>(n_) * n_, 0)
{
    std::vector<std::uint64_t> closed(g.words());
    for (Vertex v = 0; v < n_; ++v) {
        const auto row = g.row(v);
        std::copy(row.begin(), row.end(), closed.begin());
        closed[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (Vertex u = 0; u < n_; ++u)
            leq_[static_cast<std::size_t>(u) * n_ + v] = bits::subset_of(g.row(u), closed) ? 1 : 0;
    }
}

bool vicinal_leq(const Graph& g, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw GraphError("vertex out of range");
    std::vector<std::uint64_t> closed(g.row(v).begin(), g.row(v).end());
    closed[v >> 6] |= std::uint64_t{1} << (v & 63);
    return bits::subset_of(g.row(u), closed);
}

namespace {

std::vector<VertexSet> group_by_rows(const Graph& g, bool closed)
{
    std::map<std::vector<std::uint64_t>, VertexSet> groups;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::uint64_t> key(g.row(v).begin(), g.row(v).end());
        if (closed)
            key[v >> 6] |= std::uint64_t{1} << (v & 63);
        groups[std::move(key)].push_back(v);
    }
    std::vector<VertexSet> out;
    out.reserve(groups.size());
    for (auto& [_, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool rows_repeat(const Graph& g, bool closed)
{
    const int n = g.order();
    const auto words = static_cast<std::size_t>(g.words());
    std::vector<std::uint64_t> rows(n * words);
    for (Vertex v = 0; v < n; ++v) {
        std::copy(g.row(v).begin(), g.row(v).end(), rows.begin() + v * words);
        if (closed)
            rows[v * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::equal(rows.begin() + u * words, rows.begin() + (u + 1) * words, rows.begin() + v * words))
                return true;
    return false;
}

} // namespace

std::vector<VertexSet> duplication_classes(const Graph& g) { return group_by_rows(g, false); }
std::vector<VertexSet> coduplication_classes(const Graph& g) { return group_by_rows(g, true); }

bool has_duplication(const Graph& g) { return rows_repeat(g, false); }
bool has_coduplication(const Graph& g) { return rows_repeat(g, true); }

namespace {

/// Kuhn's augmenting paths; right[r] holds the left partner of r or -1.
struct Matching {
    std::vector<int> left;
    std::vector<int> right;
    int size = 0;
};

bool augment(int l, const std::vector<std::vector<int>>& adj, Matching& m, std::vector<char>& visited)
{
    for (int r : adj[l]) {
        if (visited[r])
            continue;
        visited[r] = 1;
        if (m.right[r] < 0 || augment(m.right[r], adj, m, visited)) {
            m.left[l] = r;
            m.right[r] = l;
            return true;
        }
    }
    return false;
}

Matching max_matching(const std::vector<std::vector<int>>& adj)
{
    const int q = static_cast<int>(adj.size());
    Matching m{std::vector<int>(q, -1), std::vector<int>(q, -1), 0};
    std::vector<char> visited(q);
    for (int l = 0; l < q; ++l) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(l, adj, m, visited))
            ++m.size;
    }
    return m;
}

} // namespace

DilworthReport dilworth_number(const Graph& g)
{
    const int n = g.order();
    const PreorderRelation rel(g);

    DilworthReport report;
    report.duplication_classes = duplication_classes(g);
    report.coduplication_classes = coduplication_classes(g);

    // Equivalence classes of mutual comparability, in order of first member.
    std::vector<int> cls(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (cls[v] >= 0)
            continue;
        cls[v] = static_cast<int>(report.equivalence_classes.size());
        report.equivalence_classes.push_back({v});
        for (Vertex u = v + 1; u < n; ++u)
            if (cls[u] < 0 && rel.equivalent(u, v)) {
                cls[u] = cls[v];
                report.equivalence_classes.back().push_back(u);
            }
    }
    const auto& classes = report.equivalence_classes;
    const int q = static_cast<int>(classes.size());

    // Strict order on the quotient; edge a -> b when a < b.
    std::vector<std::vector<int>> adj(q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (a != b && rel.leq(classes[a].front(), classes[b].front()))
                adj[a].push_back(b);

    const Matching m = max_matching(adj);

    for (int a = 0; a < q; ++a) {
        if (m.right[a] >= 0)
            continue;
        VertexSet chain;
        for (int c = a; c >= 0; c = m.left[c])
            chain.insert(chain.end(), classes[c].begin(), classes[c].end());
        report.chains.push_back(std::move(chain));
    }
    report.dilworth = q - m.size;

    // Koenig: Z = vertices reachable from unmatched left vertices along alternating paths.
    std::vector<char> z_left(q, 0);
    std::vector<char> z_right(q, 0);
    std::vector<int> queue;
    for (int a = 0; a < q; ++a)
        if (m.left[a] < 0) {
            z_left[a] = 1;
            queue.push_back(a);
        }
    while (!queue.empty()) {
        const int l = queue.back();
        queue.pop_back();
        for (int r : adj[l]) {
            if (z_right[r] || m.left[l] == r)
                continue;
            z_right[r] = 1;
            const int back = m.right[r];
            if (back >= 0 && !z_left[back]) {
                z_left[back] = 1;
                queue.push_back(back);
            }
        }
    }
    for (int a = 0; a < q; ++a)
        if (z_left[a] && !z_right[a])
            report.antichain.push_back(classes[a].front());
    std::sort(report.antichain.begin(), report.antichain.end());

    if (static_cast<int>(report.chains.size()) != report.dilworth ||
        static_cast<int>(report.antichain.size()) != report.dilworth)
        throw std::logic_error("dilworth_number: chain cover and antichain sizes disagree");
    return report;
}

bool is_threshold(const Graph& g)
{
    const int n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 0) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (alive[v] && (deg[v] == 0 || deg[v] == remaining - 1))
                pick = v;
        if (pick < 0)
            return false;
        alive[pick] = 0;
        --remaining;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u] && g.adjacent(u, pick))
                --deg[u];
    }
    return true;
}

std::string to_string(ThresholdShape shape)
{
    switch (shape) {
    case ThresholdShape::Leveled:
        return "leveled";
    case ThresholdShape::NotThreshold:
        return "not-threshold";
    case ThresholdShape::Edgeless:
        return "edgeless";
    case ThresholdShape::HasIsolatedVertices:
        return "has-isolated-vertices";
    case ThresholdShape::MissingCocliqueLevel:
        return "missing-coclique-level";
    }
    return "unknown";
}

namespace {

struct Peeled {
    ThresholdShape shape = ThresholdShape::Leveled;
    ThresholdStructure structure;
};

/// Alternately strips every dominating vertex (a clique level) and every
/// vertex left isolated (a coclique level).
Peeled peel(const Graph& g)
{
    Peeled out;
    if (!is_threshold(g)) {
        out.shape = ThresholdShape::NotThreshold;
        return out;
    }
    if (g.edge_count() == 0) {
        out.shape = ThresholdShape::Edgeless;
        return out;
    }
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) {
            out.shape = ThresholdShape::HasIsolatedVertices;
            return out;
        }

    std::vector<char> alive(n, 1);
    int remaining = n;
    auto alive_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex u = 0; u < n; ++u)
            d += alive[u] && g.adjacent(u, v);
        return d;
    };
    while (remaining > 0) {
        VertexSet dominating;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && alive_degree(v) == remaining - 1)
                dominating.push_back(v);
        if (dominating.empty())
            throw StructureViolation(ThresholdShape::Leveled, "threshold peeling found no dominating vertex");
        for (auto v : dominating)
            alive[v] = 0;
        remaining -= static_cast<int>(dominating.size());
        out.structure.clique_classes.push_back(std::move(dominating));

        VertexSet isolated;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && alive_degree(v) == 0)
                isolated.push_back(v);
        if (isolated.empty()) {
            out.shape = ThresholdShape::MissingCocliqueLevel;
            return out;
        }
        for (auto v : isolated)
            alive[v] = 0;
        remaining -= static_cast<int>(isolated.size());
        out.structure.coclique_classes.push_back(std::move(isolated));
    }
    return out;
}

void validate(const Graph& g, const ThresholdStructure& s)
{
    auto fail = [](const std::string& what) {
        throw StructureViolation(ThresholdShape::Leveled, "threshold structure check failed: " + what);
    };
    const auto codup = coduplication_classes(g);
    const auto dup = duplication_classes(g);
    auto is_class = [](const std::vector<VertexSet>& classes, const VertexSet& s) {
        return std::find(classes.begin(), classes.end(), s) != classes.end();
    };

    VertexSet clique;
    for (const auto& v : s.clique_classes) {
        if (v.empty() || !is_class(codup, v))
            fail("clique level is not a coduplication class");
        clique.insert(clique.end(), v.begin(), v.end());
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                fail("clique levels do not form a clique");

    VertexSet prefix;
    std::size_t covered = clique.size();
    for (std::size_t i = 0; i < s.coclique_classes.size(); ++i) {
        prefix.insert(prefix.end(), s.clique_classes[i].begin(), s.clique_classes[i].end());
        std::sort(prefix.begin(), prefix.end());
        const auto& u_level = s.coclique_classes[i];
        if (u_level.empty() || !is_class(dup, u_level))
            fail("coclique level is not a duplication class");
        for (auto u : u_level)
            if (neighborhood(g, u) != prefix)
                fail("coclique vertex " + std::to_string(u) + " has the wrong neighborhood");
        covered += u_level.size();
    }
    if (covered != static_cast<std::size_t>(g.order()))
        fail("levels do not partition the vertex set");
}

} // namespace

ThresholdShape threshold_shape(const Graph& g) { return peel(g).shape; }

ThresholdStructure threshold_structure(const Graph& g)
{
    auto peeled = peel(g);
    if (peeled.shape == ThresholdShape::NotThreshold)
        throw NotThreshold();
    if (peeled.shape != ThresholdShape::Leveled)
        throw StructureViolation(peeled.shape, "threshold graph does not fit the leveled scheme: " +
                                                   to_string(peeled.shape));
    validate(g, peeled.structure);
    return std::move(peeled.structure);
}

std::vector<VertexSet> threshold_partition(const Graph& g)
{
    auto chains = dilworth_number(g).chains;
    for (auto& c : chains)
        std::sort(c.begin(), c.end());
    std::sort(chains.begin(), chains.end());
    return chains;
}

nlohmann::json to_json(const DilworthReport& r)
{
    return {
        {"dilworth", r.dilworth},
        {"chains", r.chains},
        {"antichain", r.antichain},
        {"classes",
         {{"equivalence", r.equivalence_classes},
          {"duplication", r.duplication_classes},
          {"coduplication", r.coduplication_classes}}},
    };
}

nlohmann::json to_json(const ThresholdStructure& s)
{
    return {{"cliqueClasses", s.clique_classes}, {"cocliqueClasses", s.coclique_classes}, {"t", s.levels()}};
}

} // namespace cospec
