#pragma once

#include "cremona/number_theory.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cremona {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coefficient(i) is the coefficient of X^i. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and degree -1.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<mpz_class> coefficients);
    IntegerPolynomial(std::initializer_list<long> coefficients);

    static IntegerPolynomial monomial(std::size_t degree, const mpz_class& coefficient = 1);
    /// X^n - 1
    static IntegerPolynomial x_pow_minus_one(std::size_t n);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;

    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    /// Zero beyond the degree.
    mpz_class coefficient(std::size_t i) const;
    const mpz_class& leading() const;

    mpz_class evaluate(const mpz_class& x) const;
    /// P(X^k)
    IntegerPolynomial substitute_power(std::size_t k) const;

    IntegerPolynomial& operator+=(const IntegerPolynomial& other);
    IntegerPolynomial& operator-=(const IntegerPolynomial& other);
    IntegerPolynomial& operator*=(const IntegerPolynomial& other);

    friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// Human-readable form, highest degree first: "X^4 - X^2 + 1".
    std::string to_string() const;

private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

struct IntegerDivision {
    IntegerPolynomial quotient;
    IntegerPolynomial remainder;
};

/// Long division by a monic divisor; exact over Z.
IntegerDivision divide_monic(const IntegerPolynomial& dividend, const IntegerPolynomial& divisor);

/// Quotient of an exact division by a monic divisor; throws
/// VerificationFailure when the remainder is nonzero.
IntegerPolynomial exact_quotient(const IntegerPolynomial& dividend, const IntegerPolynomial& divisor);

IntegerPolynomial pow(const IntegerPolynomial& base, std::uint64_t exponent);

/// Polynomial over Z/p with coefficients in [0, p).
class ModularPolynomial {
public:
    explicit ModularPolynomial(PrimeModulus p, std::vector<std::uint64_t> coefficients = {});

    const PrimeModulus& modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }

    std::uint64_t evaluate(std::uint64_t x) const;

    /// Synthetic division by (X - root). Remainder is P(root).
    ModularPolynomial divide_linear(std::uint64_t root, std::uint64_t& remainder) const;

    friend ModularPolynomial operator*(const ModularPolynomial& a, const ModularPolynomial& b);
    friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;

    std::string to_string() const;

private:
    void normalize();

    PrimeModulus p_;
    std::vector<std::uint64_t> coeffs_;
};

ModularPolynomial pow(const ModularPolynomial& base, std::uint64_t exponent);

/// Coefficientwise reduction into [0, p).
ModularPolynomial reduce_mod(const IntegerPolynomial& poly, const PrimeModulus& p);

} // namespace cremona
