#include "cospec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cospec {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
{
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::linear_factor(const BigInt& root)
{
    return IntPolynomial(std::vector<BigInt>{-root, BigInt(1)});
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    if (!coeffs_.empty() && coeffs_.back() < 0)
        g = -g;
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (is_zero())
        return {};
    const BigInt c = content();
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), c.get_mpz_t());
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a)
{
    std::vector<BigInt> out(a.coeffs_);
    for (auto& x : out)
        x *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const { return BigInt(-1) * *this; }

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw std::domain_error("polynomial division is not exact");

    std::vector<BigInt> rem = a.coefficients();
    const auto& div = b.coefficients();
    const int db = b.degree();
    std::vector<BigInt> q(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        BigInt& top = rem[k + db];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw std::domain_error("polynomial division is not exact");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        for (int j = 0; j <= db; ++j)
            rem[k + j] -= q[k] * div[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::domain_error("polynomial division is not exact");
    return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("pseudo-remainder by zero polynomial");
    std::vector<BigInt> rem = a.coefficients();
    const auto& div = b.coefficients();
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        const int shift = static_cast<int>(rem.size()) - 1 - db;
        const BigInt lr = rem.back();
        for (auto& c : rem)
            c *= lb;
        for (int j = 0; j <= db; ++j)
            rem[shift + j] -= lr * div[j];
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree())
        std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u;
}

int root_multiplicity(const IntPolynomial& p, const BigInt& root)
{
    if (p.is_zero())
        throw std::domain_error("root multiplicity of the zero polynomial");
    // Synthetic division by (x - root) while the remainder vanishes.
    std::vector<BigInt> c = p.coefficients();
    int mult = 0;
    while (c.size() > 1) {
        std::vector<BigInt> q(c.size() - 1);
        BigInt carry = 0;
        for (std::size_t k = c.size(); k-- > 1;) {
            carry = carry * root + c[k];
            q[k - 1] = carry;
        }
        if (carry * root + c[0] != 0)
            break;
        c = std::move(q);
        ++mult;
    }
    return mult;
}

SquareFreeDecomposition square_free_decomposition(const IntPolynomial& p)
{
    if (p.is_zero())
        throw std::domain_error("square-free decomposition of the zero polynomial");

    SquareFreeDecomposition out;
    IntPolynomial product = IntPolynomial::constant(1);
    if (p.degree() >= 1) {
        const IntPolynomial f = p.primitive_part();
        const IntPolynomial c = primitive_gcd(f, f.derivative());
        IntPolynomial w = exact_quotient(f, c);
        IntPolynomial y = exact_quotient(f.derivative(), c);
        for (int i = 1; w.degree() >= 1; ++i) {
            const IntPolynomial z = y - w.derivative();
            const IntPolynomial g = primitive_gcd(w, z);
            if (g.degree() >= 1) {
                for (int e = 0; e < i; ++e)
                    product = product * g;
                out.parts.emplace_back(i, g);
            }
            w = exact_quotient(w, g);
            y = exact_quotient(z, g);
        }
    }
    const IntPolynomial unit = exact_quotient(p, product);
    if (unit.degree() != 0)
        throw std::logic_error("square-free decomposition lost a factor");
    out.unit = unit.leading();
    return out;
}

std::string to_string(const IntPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& c = p.coefficients()[k];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0)
            os << mag;
        if (k >= 1)
            os << 'x';
        if (k >= 2)
            os << '^' << k;
        first = false;
    }
    return os.str();
}

nlohmann::json to_json(const IntPolynomial& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.get_str());
    return arr;
}

} // namespace cospec
