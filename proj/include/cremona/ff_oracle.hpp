#pragma once

// Ground truth over finite fields. For a torus over F_q whose arithmetic
// Frobenius acts on the cocharacter lattice by sigma,
//
//     T(F_q) = coker(q * sigma - I : Z^d -> Z^d),
//
// so its structure is read off from Smith invariants and the rank of its
// p-torsion is the number of invariant factors divisible by p.

#include "cremona/int_matrix.hpp"
#include "cremona/intlinalg.hpp"
#include "cremona/number_theory.hpp"
#include "cremona/torus_rank.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cremona {

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class FiniteFieldTorus {
public:
    /// Throws DomainError unless q is a prime power <= 2^20, NotFiniteOrder
    /// if sigma has infinite order.
    FiniteFieldTorus(std::uint64_t q, IntegerMatrix sigma);

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    const IntegerMatrix& sigma() const noexcept { return sigma_; }
    std::size_t dimension() const noexcept { return sigma_.dimension(); }

    /// q * sigma - I
    IntegerMatrix frobenius_shift() const;

private:
    std::uint64_t q_;
    std::uint64_t characteristic_;
    IntegerMatrix sigma_;
};

/// Divisibility-chained invariant factors, all >= 1 (unit factors kept).
struct AbelianGroupInvariants {
    std::vector<mpz_class> invariants;

    mpz_class order() const;
    std::string to_string() const; // "Z/1 x Z/3"
    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

AbelianGroupInvariants rational_points_structure(const FiniteFieldTorus& tor);

/// Number of invariant factors divisible by p.
std::uint64_t p_elementary_rank(const AbelianGroupInvariants& group, const PrimeModulus& p);

/// Multiplicative order of q mod p, i.e. [F_q(zeta_p) : F_q]. Throws
/// DomainError when p divides q.
std::uint64_t t_of_finite_field(std::uint64_t q, const PrimeModulus& p);

/// |det(q * sigma - I)|
mpz_class group_order(const FiniteFieldTorus& tor);

// ---------------------------------------------------------------------------
// Random finite-order lattice automorphisms.

struct UnimodularPair {
    IntegerMatrix forward;
    IntegerMatrix inverse;
};

/// Random U in GL_d(Z) with entries in [-2, 2], built from row swaps, sign
/// changes and elementary transvections; the inverse is tracked exactly.
UnimodularPair random_unimodular(std::mt19937_64& rng, std::size_t dimension, int steps = 12);

/// Block-diagonal assembly of companion matrices of Phi_m (m <= 12) and
/// signed permutation blocks, conjugated by a random unimodular matrix.
IntegerMatrix random_finite_order_matrix(std::mt19937_64& rng, std::size_t dimension);

// ---------------------------------------------------------------------------
// Sweeps.

struct OracleSweepConfig {
    std::uint64_t seed = 0;
    std::size_t tori = 200;
    std::size_t max_dimension = 6;
    std::vector<std::uint64_t> field_sizes{2, 3, 4, 5, 7, 8, 9};
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
};

struct OracleViolation {
    std::size_t torus_index;
    std::uint64_t q;
    std::uint64_t p;
    std::string sigma;
    std::string check;
    std::string detail;
};

struct OracleSweepReport {
    OracleSweepConfig config;
    std::size_t tori = 0;
    std::size_t cases = 0;         // (torus, q, p) triples with p not dividing q
    std::size_t max_rank_seen = 0; // largest p-elementary rank encountered
    std::vector<OracleViolation> violations;

    bool pass() const noexcept { return violations.empty(); }
};

/// For each seeded random torus and each (q, p) with p not dividing q:
///   equivalence - p-rank of coker(q sigma - I) = dim ker(q sigma - I mod p)
///                 = dim of the eigenspace of sigma at q^{-1} mod p
///   bound       - that rank is at most floor(d / phi(ord_p q))
///   order       - |det(q sigma - I)| = product of invariant factors
OracleSweepReport oracle_sweep(const OracleSweepConfig& config);

struct SharpnessRow {
    std::uint64_t t;
    std::uint64_t d;
    std::uint64_t bound;               // floor(d / phi(t))
    std::vector<std::uint64_t> primes; // three smallest p = 1 mod t
    std::vector<std::uint64_t> fixed_point_ranks;
    std::uint64_t oracle_p;            // smallest prime p = 1 mod t
    std::uint64_t oracle_q;            // smallest prime power of order t mod oracle_p
    std::uint64_t oracle_rank;
    std::string group;                 // T(F_q) structure
    bool attained;
};

struct SharpnessReport {
    std::vector<SharpnessRow> rows;
    bool pass() const noexcept;
};

/// Smallest prime power q with p not dividing q and ord_p(q) = t.
std::uint64_t smallest_field_with_order(std::uint64_t t, const PrimeModulus& p);

/// The `count` smallest primes p with t | p - 1.
std::vector<PrimeModulus> smallest_primes_one_mod(std::uint64_t t, std::size_t count);

/// For each t and each d in [phi(t), max_dimension]: sharp_construction(d, t)
/// checked with fixed_point_rank at the three smallest admissible primes and
/// with the finite-field oracle over the smallest admissible field.
SharpnessReport sharpness_sweep(const std::vector<std::uint64_t>& orders, std::uint64_t max_dimension);

} // namespace cremona
