#include "cospec/linalg.hpp"

#include <algorithm>
#include <string>

namespace cospec {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::shifted(const BigInt& c) const
{
    if (!square())
        throw std::invalid_argument("shift of a non-square matrix");
    IntMatrix m = *this;
    for (int i = 0; i < rows_; ++i)
        m(i, i) += c;
    return m;
}

NotEquitable::NotEquitable(Vertex u, Vertex v, int target_part)
    : std::runtime_error("partition is not equitable: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " differ in neighbors inside part " + std::to_string(target_part)),
      pair_(u, v), target_(target_part)
{
}

IntMatrix adjacency_matrix(const Graph& g)
{
    const int n = g.order();
    IntMatrix m(n, n);
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

int rank(const IntMatrix& input)
{
    IntMatrix m = input;
    const int rows = m.rows();
    const int cols = m.cols();
    BigInt prev = 1;
    BigInt t;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = r;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (int j = c; j < cols; ++j)
                std::swap(m(pivot, j), m(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                // m(i,j) <- (m(r,c) m(i,j) - m(i,c) m(r,j)) / prev, exact by Sylvester's identity
                t = m(r, c) * m(i, j);
                t -= m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

IntPolynomial char_poly(const IntMatrix& a)
{
    if (!a.square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const int n = a.rows();

    // Coefficients of the leading r x r principal minor's polynomial, highest degree first.
    std::vector<BigInt> poly{BigInt(1)};
    std::vector<BigInt> t;
    std::vector<BigInt> v;
    std::vector<BigInt> next_v;
    for (int r = 0; r < n; ++r) {
        // Split the (r+1)x(r+1) block as [[M, col], [row, a_rr]].
        t.assign(r + 2, 0);
        t[0] = 1;
        t[1] = -a(r, r);
        v.resize(r);
        for (int i = 0; i < r; ++i)
            v[i] = a(i, r);
        for (int k = 0; k < r; ++k) {
            BigInt dot = 0;
            for (int j = 0; j < r; ++j)
                dot += a(r, j) * v[j];
            t[k + 2] = -dot;
            if (k + 1 < r) {
                next_v.assign(r, 0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        next_v[i] += a(i, j) * v[j];
                v.swap(next_v);
            }
        }
        // Lower-triangular Toeplitz product: (r+2) x (r+1) with first column t.
        std::vector<BigInt> next(r + 2);
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= std::min(i, r); ++j)
                next[i] += t[i - j] * poly[j];
        poly.swap(next);
    }
    std::reverse(poly.begin(), poly.end());
    return IntPolynomial(std::move(poly));
}

std::vector<IntVector> null_space_basis(const IntMatrix& input)
{
    // Fraction-free reduced row echelon form.
    IntMatrix m = input;
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = r;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(r, j));
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const BigInt f = m(i, c);
            const BigInt p = m(r, c);
            BigInt g = 0;
            for (int j = 0; j < cols; ++j) {
                m(i, j) = p * m(i, j) - f * m(r, j);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
            }
            if (g > 1)
                for (int j = 0; j < cols; ++j)
                    mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), g.get_mpz_t());
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_cols)
        is_pivot[c] = 1;

    BigInt scale = 1;
    for (int i = 0; i < r; ++i)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, pivot_cols[i]).get_mpz_t());

    std::vector<IntVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        IntVector x(cols, 0);
        x[free] = scale;
        for (int i = 0; i < r; ++i) {
            // m(i,p) x_p + m(i,free) x_free = 0
            const BigInt& p = m(i, pivot_cols[i]);
            BigInt num = -m(i, free) * scale;
            mpz_divexact(x[pivot_cols[i]].get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        }
        BigInt g = 0;
        for (const auto& e : x)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        for (auto& e : x)
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(x));
    }
    return basis;
}

SpectralProfile multiplicity_profile(const Graph& g)
{
    SpectralProfile p;
    p.n = g.order();
    const IntMatrix a = adjacency_matrix(g);
    p.char_poly = char_poly(a);

    p.mult0 = root_multiplicity(p.char_poly, 0);
    p.mult_minus1 = root_multiplicity(p.char_poly, -1);

    const int by_rank0 = p.n - rank(a);
    const int by_rank1 = p.n - rank(a.shifted(1));
    if (by_rank0 != p.mult0 || by_rank1 != p.mult_minus1) {
        throw InternalCheckFailure("multiplicity_profile: characteristic polynomial and rank disagree (mult0 " +
                                   std::to_string(p.mult0) + " vs " + std::to_string(by_rank0) + ", mult(-1) " +
                                   std::to_string(p.mult_minus1) + " vs " + std::to_string(by_rank1) + ")");
    }

    IntPolynomial rest = p.char_poly;
    for (int i = 0; i < p.mult0; ++i)
        rest = exact_quotient(rest, IntPolynomial::linear_factor(0));
    for (int i = 0; i < p.mult_minus1; ++i)
        rest = exact_quotient(rest, IntPolynomial::linear_factor(-1));

    const auto sfd = square_free_decomposition(rest);
    p.square_free_parts = sfd.parts;

    int total = p.mult0 + p.mult_minus1;
    for (const auto& [i, s] : p.square_free_parts) {
        total += i * s.degree();
        p.max_other_mult = std::max(p.max_other_mult, i);
    }
    if (total != p.n)
        throw InternalCheckFailure("multiplicity_profile: multiplicities do not sum to n");
    return p;
}

int integer_eigenvalue_multiplicity(const Graph& g, long lambda)
{
    return g.order() - rank(adjacency_matrix(g).shifted(-lambda));
}

bool verify_eigenvector(const Graph& g, long lambda, std::span<const BigInt> x)
{
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("eigenvector has " + std::to_string(x.size()) + " entries, graph has " +
                                    std::to_string(g.order()) + " vertices");
    if (std::all_of(x.begin(), x.end(), [](const BigInt& e) { return e == 0; }))
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        BigInt sum = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            if (g.adjacent(u, v))
                sum += x[u];
        if (sum != lambda * x[v])
            return false;
    }
    return true;
}

bool verify_eigenvector(const Graph& g, long lambda, std::span<const long> x)
{
    IntVector big(x.begin(), x.end());
    return verify_eigenvector(g, lambda, std::span<const BigInt>(big));
}

IntMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> parts)
{
    const int n = g.order();
    std::vector<int> owner(n, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw GraphError("quotient_matrix: empty part");
        for (auto v : parts[p]) {
            if (v < 0 || v >= n)
                throw GraphError("quotient_matrix: vertex " + std::to_string(v) + " out of range");
            if (owner[v] >= 0)
                throw GraphError("quotient_matrix: vertex " + std::to_string(v) + " in two parts");
            owner[v] = static_cast<int>(p);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (owner[v] < 0)
            throw GraphError("quotient_matrix: vertex " + std::to_string(v) + " in no part");

    const int k = static_cast<int>(parts.size());
    IntMatrix q(k, k);
    std::vector<int> counts(k);
    for (int i = 0; i < k; ++i) {
        const Vertex first = parts[i].front();
        for (std::size_t idx = 0; idx < parts[i].size(); ++idx) {
            const Vertex v = parts[i][idx];
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex u = 0; u < n; ++u)
                if (g.adjacent(u, v))
                    ++counts[owner[u]];
            for (int j = 0; j < k; ++j) {
                if (idx == 0)
                    q(i, j) = counts[j];
                else if (q(i, j) != counts[j])
                    throw NotEquitable(first, v, j);
            }
        }
    }
    return q;
}

nlohmann::json to_json(const SpectralProfile& p)
{
    auto parts = nlohmann::json::array();
    for (const auto& [i, s] : p.square_free_parts)
        parts.push_back({{"multiplicity", i}, {"poly", to_json(s)}});
    return {
        {"n", p.n},
        {"mult0", p.mult0},
        {"multMinus1", p.mult_minus1},
        {"squareFreeParts", std::move(parts)},
        {"maxOtherMult", p.max_other_mult},
        {"charPoly", to_json(p.char_poly)},
    };
}

nlohmann::json to_json(const IntMatrix& m)
{
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const IntVector& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& e : v)
        arr.push_back(e.get_str());
    return arr;
}

} // namespace cospec
