#pragma once

#include "cremona/polynomial.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cremona {

/// Square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    /// d x d zero matrix; d >= 1.
    explicit IntegerMatrix(std::size_t dimension);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    /// Throws DomainError unless rows form a nonempty square array.
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    static IntegerMatrix identity(std::size_t dimension);
    /// Companion matrix of a monic polynomial: ones on the subdiagonal, last
    /// column holds the negated low coefficients.
    static IntegerMatrix companion(const IntegerPolynomial& monic);
    static IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks);

    std::size_t dimension() const noexcept { return dim_; }

    mpz_class& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const mpz_class& operator()(std::size_t row, std::size_t col) const
    {
        return entries_[row * dim_ + col];
    }

    const std::vector<mpz_class>& entries() const noexcept { return entries_; }

    bool is_identity() const;
    IntegerMatrix transpose() const;

    IntegerMatrix& operator+=(const IntegerMatrix& other);
    IntegerMatrix& operator-=(const IntegerMatrix& other);
    friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) { return a += b; }
    friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) { return a -= b; }
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const mpz_class& scalar, IntegerMatrix m);
    friend IntegerMatrix operator-(IntegerMatrix m);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    /// "[[0, -1], [1, 0]]"
    std::string to_string() const;

private:
    std::size_t dim_;
    std::vector<mpz_class> entries_;
};

IntegerMatrix pow(const IntegerMatrix& base, std::uint64_t exponent);

} // namespace cremona
