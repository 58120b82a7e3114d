#pragma once

// Rank of the p-torsion of an algebraic torus fixed by one Galois element.
//
// A torus T of dimension d over k is presented by the integer matrix sigma
// through which a Galois element g acts on the cocharacter lattice, and by
// the order t of g acting on the p-th roots of unity. The g-fixed part of
// T[p] is the eigenspace of sigma mod p at eps = chi(g)^{-1}, whose
// dimension is at most the multiplicity of eps in the reduced characteristic
// polynomial, hence at most floor(d / phi(t)).
//
// The whole Galois group is represented by this single element. Over a
// finite field, where Frobenius generates, the eigenspace rank is exactly
// rk T(k)[p]; over other fields it is an upper bound.

#include "cremona/int_matrix.hpp"
#include "cremona/intlinalg.hpp"
#include "cremona/number_theory.hpp"

#include <cstdint>
#include <vector>

namespace cremona {

class GaloisTorusPresentation {
public:
    /// Throws NotFiniteOrder if sigma has infinite order, DomainError if
    /// chi_order is 0.
    GaloisTorusPresentation(IntegerMatrix sigma, std::uint64_t chi_order);

    std::size_t dimension() const noexcept { return sigma_.dimension(); }
    const IntegerMatrix& sigma() const noexcept { return sigma_; }
    std::uint64_t chi_order() const noexcept { return chi_order_; }
    std::uint64_t sigma_order() const noexcept { return sigma_order_; }

private:
    IntegerMatrix sigma_;
    std::uint64_t chi_order_;
    std::uint64_t sigma_order_;
};

struct RankCertificate {
    std::uint64_t upper_bound;
    std::uint64_t eigenspace_rank;
    CyclotomicFactorization char_poly_indices;
    std::uint64_t eps_used;
};

/// floor(d / phi(t)). Throws DomainError for d = 0 or t = 0.
std::uint64_t theorem_bound(std::uint64_t d, std::uint64_t t);

/// Inverse of the smallest positive residue of order t mod p.
std::uint64_t canonical_epsilon(std::uint64_t t, const PrimeModulus& p);

/// dim ker(sigma - eps I) over Z/p.
std::uint64_t eigenspace_dim(const IntegerMatrix& sigma, std::uint64_t eps, const PrimeModulus& p);

/// Throws DomainError when t does not divide p - 1 (no Galois element
/// realizes this character order at p).
RankCertificate fixed_point_rank(const GaloisTorusPresentation& pres, const PrimeModulus& p);

struct FactorMultiplicity {
    std::uint64_t index;        // d_i
    std::uint64_t multiplicity; // of eps in Phi_{d_i} mod p
    std::uint64_t phi_index;    // phi(d_i); bound is phi(d_i) / phi(t)
    bool within_bound;
};

struct EpsilonRow {
    std::uint64_t eps;
    std::uint64_t char_poly_multiplicity;
    std::uint64_t eigenspace_dim;
};

struct MultiplicityChainReport {
    std::uint64_t p = 0;
    std::uint64_t t = 0;
    std::uint64_t phi_t = 0;
    std::uint64_t d = 0;
    std::uint64_t eps = 0;
    std::vector<FactorMultiplicity> factors;
    std::uint64_t total_multiplicity = 0; // of eps in F mod p
    std::uint64_t total_bound = 0;        // floor(d / phi(t))
    std::uint64_t eigenspace_rank = 0;
    /// One row per order-t residue eps. The multiplicities must agree; the
    /// eigenspace dimensions are recorded but not required to agree.
    std::vector<EpsilonRow> per_epsilon;
    std::vector<std::string> failures;

    bool pass() const noexcept { return failures.empty(); }
};

MultiplicityChainReport multiplicity_chain_check(const GaloisTorusPresentation& pres,
                                                 const PrimeModulus& p);

/// floor(d / phi(t)) companion blocks of Phi_t followed by an identity block
/// filling the remaining dimension. Throws DomainError if phi(t) > d.
GaloisTorusPresentation sharp_construction(std::uint64_t d, std::uint64_t t);

} // namespace cremona
