#pragma once

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

#include <json.hpp>

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cospec {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix from_rows(std::span<const IntVector> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// this + c * I (square only)
    IntMatrix shifted(const BigInt& c) const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotEquitable : public std::runtime_error {
public:
    NotEquitable(Vertex u, Vertex v, int target_part);
    /// Two vertices of one part with different neighbor counts into target_part().
    std::pair<Vertex, Vertex> violating_pair() const { return pair_; }
    int target_part() const { return target_; }

private:
    std::pair<Vertex, Vertex> pair_;
    int target_;
};

IntMatrix adjacency_matrix(const Graph& g);

/// Rank over Q by fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);

/// det(xI - M) by Berkowitz's division-free algorithm. Throws std::invalid_argument if not square.
IntPolynomial char_poly(const IntMatrix& m);

/// Integer basis of the rational null space of m (primitive vectors), one per free column.
std::vector<IntVector> null_space_basis(const IntMatrix& m);

struct SpectralProfile {
    int n = 0;
    int mult0 = 0;
    int mult_minus1 = 0;
    /// Square-free parts of char(A) / (x^mult0 (x+1)^mult_minus1).
    std::vector<std::pair<int, IntPolynomial>> square_free_parts;
    /// Largest multiplicity of an eigenvalue other than 0 and -1; 0 if there is none.
    int max_other_mult = 0;
    IntPolynomial char_poly;
};

/// Throws InternalCheckFailure if the polynomial and rank routes disagree.
SpectralProfile multiplicity_profile(const Graph& g);

/// n - rank(A - lambda I).
int integer_eigenvalue_multiplicity(const Graph& g, long lambda);

/// Sum rule lambda x(v) = sum over neighbors u of x(u), at every vertex. False for the zero vector.
bool verify_eigenvector(const Graph& g, long lambda, std::span<const BigInt> x);
bool verify_eigenvector(const Graph& g, long lambda, std::span<const long> x);

/// Quotient matrix (b_ij) of an equitable partition. Throws NotEquitable, or
/// GraphError if the parts do not partition V(G).
IntMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> parts);

nlohmann::json to_json(const SpectralProfile& profile);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntVector& v);

} // namespace cospec
