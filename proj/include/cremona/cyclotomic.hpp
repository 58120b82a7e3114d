#pragma once

// Cyclotomic polynomials over Z, their reductions modulo a prime, and the
// multiplicity with which residues of a fixed multiplicative order t occur as
// roots of the reduction.
//
// For p not dividing n the roots of Phi_n mod p inside (Z/p)* are exactly the
// elements of order n, each simple. Multiplying n by a power q = p^f raises
// the reduction to the power phi(q). Hence an order-t residue is a root of
// Phi_n mod p iff n = t * p^f, and then with multiplicity phi(p^f).

#include "cremona/number_theory.hpp"
#include "cremona/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cremona {

inline constexpr std::uint64_t kMaxCyclotomicIndex = 1'000'000;

/// Phi_n with exact integer coefficients, 1 <= n <= 10^6. Results for small
/// squarefree kernels are memoized; safe to call concurrently.
IntegerPolynomial cyclotomic_poly(std::uint64_t n);

/// Largest m with (X - eps)^m dividing pbar. Throws DomainError for the zero
/// polynomial.
std::uint64_t root_multiplicity(const ModularPolynomial& pbar, std::uint64_t eps);

/// Common multiplicity of every residue of order t as a root of Phi_n mod p.
/// The p-part of n is stripped first. Throws DomainError if t does not divide
/// p - 1 and VerificationFailure if two order-t residues disagree.
std::uint64_t order_t_multiplicity(std::uint64_t n, const PrimeModulus& p, std::uint64_t t);

/// True iff n = t * p^f for some f >= 0.
bool is_t_times_p_power(std::uint64_t n, std::uint64_t t, std::uint64_t p);

struct LemmaCounterexample {
    std::uint64_t n;
    std::uint64_t p;
    std::uint64_t t; // 0 for checks not indexed by t
    std::string check;
    std::string detail;
};

struct LemmaReport {
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> primes;
    std::uint64_t triples_checked = 0;  // (n, p, t) uniformity/positivity checks
    std::uint64_t identity_checks = 0;  // Phi_{n p^f} = Phi_n^{phi(p^f)} mod p
    std::uint64_t root_count_checks = 0;
    std::vector<LemmaCounterexample> counterexamples; // sorted by (n, p, t)

    bool pass() const noexcept { return counterexamples.empty(); }
};

/// Exhaustive check over n <= n_max and the given primes:
///   uniformity   - every order-t residue has the same multiplicity in Phi_n mod p
///   positivity   - that multiplicity is positive iff n = t p^f
///   stripping    - order_t_multiplicity agrees with the direct computation
///   identity     - Phi_{n p^f} = (Phi_n)^{phi(p^f)} mod p for p not dividing n, f <= 2
///   root-count   - for p not dividing n, roots in (Z/p)* with multiplicity
///                  number phi(n) if n | p - 1 and 0 otherwise
/// Primes are processed concurrently; the result is deterministic.
LemmaReport verify_lemma_range(std::uint64_t n_max, const std::vector<PrimeModulus>& primes);

} // namespace cremona
