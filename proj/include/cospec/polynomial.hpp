#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using BigInt = mpz_class;

/// Dense polynomial over the integers, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    IntPolynomial(std::initializer_list<long> ascending);

    static IntPolynomial constant(const BigInt& c);
    /// x - root
    static IntPolynomial linear_factor(const BigInt& root);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }
    /// Coefficient of x^k; zero beyond the degree.
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    IntPolynomial derivative() const;
    /// gcd of the coefficients, signed like the leading coefficient.
    BigInt content() const;
    IntPolynomial primitive_part() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
    IntPolynomial operator-() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Quotient of an exact division in Z[x]; throws std::domain_error if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Remainder r with lc(b)^e * a = q * b + r for some e >= 0.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS). gcd(0, 0) = 0.
IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Largest e such that (x - root)^e divides p. p must be nonzero.
int root_multiplicity(const IntPolynomial& p, const BigInt& root);

struct SquareFreeDecomposition {
    /// p = unit * prod s_i^i
    BigInt unit;
    /// (i, s_i) with deg s_i >= 1, each primitive with positive leading coefficient, ascending i.
    std::vector<std::pair<int, IntPolynomial>> parts;
};

/// Yun's algorithm over Z[x]; throws std::domain_error on the zero polynomial.
SquareFreeDecomposition square_free_decomposition(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p);
/// Ascending coefficients as decimal strings.
nlohmann::json to_json(const IntPolynomial& p);

} // namespace cospec
