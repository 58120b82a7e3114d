#pragma once

// Exact linear algebra over Z and Z/p for the small square matrices that
// describe a Galois element acting on a cocharacter lattice.

#include "cremona/int_matrix.hpp"
#include "cremona/number_theory.hpp"
#include "cremona/polynomial.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace cremona {

inline constexpr std::size_t kMaxMatrixDimension = 64;

/// Fraction-free Bareiss elimination.
mpz_class determinant(const IntegerMatrix& m);

/// det(X*I - M), monic of degree d. Evaluated at X = 0..d by Bareiss and
/// recovered by exact Newton interpolation. Throws DomainError for d > 64.
IntegerPolynomial char_poly(const IntegerMatrix& m);

/// Multiset {d_i} with prod Phi_{d_i} = F, stored ascending.
struct CyclotomicFactorization {
    std::vector<std::uint64_t> indices;

    /// sum phi(d_i)
    std::uint64_t degree() const;
    /// lcm of the indices; 1 for the empty factorization.
    std::uint64_t index_lcm() const;
    friend bool operator==(const CyclotomicFactorization&, const CyclotomicFactorization&) = default;
};

/// Greedy trial division by Phi_d for ascending d <= 2 deg(F)^2 + 6 with
/// phi(d) at most the remaining degree. Throws DomainError unless F is monic
/// of positive degree, NotCyclotomicProduct if a non-cyclotomic cofactor
/// remains.
CyclotomicFactorization cyclotomic_factorization(const IntegerPolynomial& f);

/// Least N >= 1 with M^N = I: N is the lcm of the cyclotomic indices of the
/// characteristic polynomial, confirmed by explicit powering (which rejects
/// nontrivial unipotent parts). Throws NotFiniteOrder.
std::uint64_t matrix_order(const IntegerMatrix& m);

/// Invariant factors s_1 | s_2 | ... | s_d of Z^d / M Z^d. Nonnegative,
/// zeros last.
struct SmithInvariants {
    std::vector<mpz_class> invariants;
    friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

SmithInvariants smith_normal_form(const IntegerMatrix& m);

std::size_t rank_mod_p(const IntegerMatrix& m, const PrimeModulus& p);

/// dim over Z/p of the null space of M mod p.
std::size_t kernel_dim_mod_p(const IntegerMatrix& m, const PrimeModulus& p);

} // namespace cremona
