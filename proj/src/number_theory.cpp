#include "cremona/number_theory.hpp"

#include "cremona/errors.hpp"

#include <algorithm>
#include <string>

namespace cremona {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % small == 0)
            return n == small;
    }
    if (n >= (std::uint64_t{1} << 32)) {
        // Outside the deterministic range; fall back to trial division.
        for (std::uint64_t d = 17; d * d <= n; d += 2)
            if (n % d == 0)
                return false;
        return true;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0)
            continue;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p)
{
    if (p >= kLimit)
        throw DomainError("modulus " + std::to_string(p) + " exceeds the supported range 2^31");
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
}

std::vector<PrimePower> factorize(std::uint64_t n)
{
    std::vector<PrimePower> out;
    if (n == 0)
        throw DomainError("cannot factor 0");
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0)
            continue;
        PrimePower pp{d, 0};
        while (n % d == 0) {
            n /= d;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        const std::size_t count = out.size();
        std::uint64_t power = 1;
        for (std::uint64_t e = 0; e < exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("euler_phi(0) is undefined");
    std::uint64_t result = n;
    for (const auto& pp : factorize(n))
        result = result / pp.prime * (pp.prime - 1);
    return result;
}

int moebius(std::uint64_t n)
{
    int sign = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd(a, b) * b;
}

std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m)
{
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = a % sm;
    if (r < 0)
        r += sm;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, const PrimeModulus& p)
{
    a %= p.value();
    if (a == 0)
        throw DomainError("0 has no inverse modulo " + std::to_string(p.value()));
    return pow_mod(a, p.value() - 2, p.value());
}

std::uint64_t multiplicative_order(std::int64_t a, const PrimeModulus& p)
{
    const std::uint64_t residue = reduce_signed(a, p.value());
    if (residue == 0)
        throw DomainError(std::to_string(a) + " is divisible by " + std::to_string(p.value()));
    // Strip prime factors of p - 1 while the power stays 1.
    std::uint64_t order = p.value() - 1;
    for (const auto& pp : factorize(p.value() - 1)) {
        for (std::uint64_t e = 0; e < pp.exponent; ++e) {
            if (pow_mod(residue, order / pp.prime, p.value()) != 1)
                break;
            order /= pp.prime;
        }
    }
    return order;
}

std::vector<std::uint64_t> residues_of_order(std::uint64_t t, const PrimeModulus& p)
{
    const std::uint64_t group = p.value() - 1;
    if (t == 0 || group % t != 0)
        throw DomainError("order " + std::to_string(t) + " does not divide p - 1 = " +
                          std::to_string(group));
    if (group == 1)
        return {1};
    std::uint64_t generator = 2;
    while (multiplicative_order(static_cast<std::int64_t>(generator), p) != group)
        ++generator;
    const std::uint64_t base = pow_mod(generator, group / t, p.value());
    std::vector<std::uint64_t> out;
    out.reserve(euler_phi(t));
    std::uint64_t power = 1;
    for (std::uint64_t k = 0; k < t; ++k) {
        if (gcd(k, t) == 1)
            out.push_back(power);
        power = mul_mod(power, base, p.value());
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimePower as_prime_power(std::uint64_t q)
{
    if (q < 2)
        throw DomainError(std::to_string(q) + " is not a prime power");
    const auto factors = factorize(q);
    if (factors.size() != 1)
        throw DomainError(std::to_string(q) + " is not a prime power");
    return factors.front();
}

} // namespace cremona
