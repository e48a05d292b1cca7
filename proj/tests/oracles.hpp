#pragma once

// Slow reference implementations used only by the tests. None of them call the
// library algorithms they are compared against.

#include "cospec/graph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using cospec::Graph;
using cospec::Vertex;

inline int rational_rank(std::vector<std::vector<mpq_class>> m)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int rational_rank(const std::vector<std::vector<long>>& m)
{
    std::vector<std::vector<mpq_class>> q;
    for (const auto& row : m) {
        q.emplace_back();
        for (long v : row)
            q.back().emplace_back(v);
    }
    return rational_rank(std::move(q));
}

using Poly = std::vector<long>; // ascending

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

/// det(xI - A) by Laplace expansion along rows, memoised on the set of used columns.
inline Poly cofactor_char_poly(const Graph& g)
{
    const int n = g.order();
    std::map<unsigned, Poly> memo;
    auto entry = [&](int r, int c) -> Poly {
        if (r == c)
            return {0, 1};
        return {g.adjacent(r, c) ? -1L : 0L};
    };
    auto det = [&](auto&& self, int row, unsigned used) -> Poly {
        if (row == n)
            return {1};
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        Poly total(n - row + 1, 0);
        int position = 0;
        for (int c = 0; c < n; ++c) {
            if (used & (1U << c))
                continue;
            const Poly e = entry(row, c);
            const bool zero = std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
            if (!zero) {
                Poly term = poly_mul(e, self(self, row + 1, used | (1U << c)));
                const long sign = (position % 2 == 0) ? 1 : -1;
                for (std::size_t k = 0; k < term.size() && k < total.size(); ++k)
                    total[k] += sign * term[k];
            }
            ++position;
        }
        memo[used] = total;
        return total;
    };
    Poly p = det(det, 0, 0);
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
    return p;
}

inline bool induced_by_brute_force(const Graph& g, const Graph& h)
{
    const int k = h.order();
    const int n = g.order();
    if (k > n)
        return false;
    for (unsigned s = 0; s < (1U << n); ++s) {
        if (__builtin_popcount(s) != k)
            continue;
        std::vector<Vertex> verts;
        for (int v = 0; v < n; ++v)
            if (s & (1U << v))
                verts.push_back(v);
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    ok = g.adjacent(verts[i], verts[j]) == h.adjacent(i, j);
            if (ok)
                return true;
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    return false;
}

inline bool has_induced_p4(const Graph& g)
{
    const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    return induced_by_brute_force(g, p4);
}

/// N(u) subset of N[v], straight from the definition.
inline bool vicinal(const Graph& g, Vertex u, Vertex v)
{
    for (Vertex w = 0; w < g.order(); ++w)
        if (g.adjacent(u, w) && w != v && !g.adjacent(v, w))
            return false;
    return true;
}

/// Maximum antichain by exhaustive subset search (n <= 12).
inline int max_antichain(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (unsigned s = 1; s < (1U << n); ++s) {
        const int size = __builtin_popcount(s);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1U) && (s >> v & 1U))
                    ok = !vicinal(g, u, v) && !vicinal(g, v, u);
        if (ok)
            best = size;
    }
    return best;
}

inline std::uint64_t min_mask_all_permutations(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v)) {
                    const int a = std::min(perm[u], perm[v]);
                    const int b = std::max(perm[u], perm[v]);
                    m |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
                }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Number of isomorphism classes on n vertices by brute force over every labeled graph.
inline std::size_t isomorphism_class_count(int n)
{
    std::set<std::uint64_t> seen;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        seen.insert(min_mask_all_permutations(cospec::from_pair_mask(n, mask)));
    return seen.size();
}

/// Does e_u - s e_v (s = 1) lie in the null space of A - shift I?
inline bool weight_two_null(const Graph& g, int shift, Vertex u, Vertex v)
{
    for (Vertex w = 0; w < g.order(); ++w) {
        long sum = 0;
        if (g.adjacent(w, u))
            sum += 1;
        if (g.adjacent(w, v))
            sum -= 1;
        const long xw = (w == u) - (w == v);
        if (sum != shift * xw)
            return false;
    }
    return true;
}

inline int triangle_count(const Graph& g)
{
    int t = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                t += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    return t;
}

} // namespace oracle
