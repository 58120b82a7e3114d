#pragma once

#include <cstdint>
#include <vector>

namespace cremona {

/// Deterministic Miller-Rabin for n < 2^32 (bases 2, 7, 61).
bool is_prime(std::uint64_t n);

/// A prime p with 2 <= p < 2^31, checked at construction.
class PrimeModulus {
public:
    static constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;

    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    operator std::uint64_t() const noexcept { return p_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;
    friend auto operator<=>(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t p_;
};

struct PrimePower {
    std::uint64_t prime;
    std::uint64_t exponent;
};

/// Prime factorization by trial division, ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient. Throws DomainError for n = 0.
std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function; n >= 1.
int moebius(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, const PrimeModulus& p);
/// Canonical residue of a signed value.
std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m);

/// Least m >= 1 with a^m = 1 mod p. Throws DomainError if p | a.
std::uint64_t multiplicative_order(std::int64_t a, const PrimeModulus& p);

/// All residues of exact multiplicative order t, ascending. Throws
/// DomainError unless t | p - 1.
std::vector<std::uint64_t> residues_of_order(std::uint64_t t, const PrimeModulus& p);

/// Returns the prime l and exponent m with q = l^m, or throws DomainError.
PrimePower as_prime_power(std::uint64_t q);

} // namespace cremona
