#pragma once

// Test-only reference computations. Each is deliberately naive and shares no
// code path with the library routine it checks.

#include "cremona/int_matrix.hpp"
#include "cremona/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cremona::IntegerMatrix;
using cremona::IntegerPolynomial;

inline std::uint64_t gcd_count_phi(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            ++count;
    return count;
}

inline bool trial_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::uint64_t brute_order(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    std::uint64_t x = a, m = 1;
    while (x != 1) {
        x = x * a % p;
        ++m;
    }
    return m;
}

/// Determinant by the Leibniz permutation expansion (d <= 7).
inline mpz_class leibniz_det(const IntegerMatrix& m)
{
    const std::size_t d = m.dimension();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    mpz_class total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        mpz_class term = sign;
        for (std::size_t i = 0; i < d; ++i)
            term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion over Q.
inline IntegerPolynomial leverrier_char_poly(const IntegerMatrix& m)
{
    const std::size_t d = m.dimension();
    std::vector<mpq_class> a(d * d), mk(d * d, 0), tmp(d * d);
    for (std::size_t k = 0; k < d * d; ++k)
        a[k] = m.entries()[k];
    std::vector<mpq_class> c(d + 1);
    c[d] = 1;
    // M_0 = 0, c_d = 1; M_k = A M_{k-1} + c_{d-k+1} I; c_{d-k} = -tr(A M_k)/k
    for (std::size_t k = 1; k <= d; ++k) {
        std::vector<mpq_class> next(d * d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                mpq_class s = 0;
                for (std::size_t l = 0; l < d; ++l)
                    s += a[i * d + l] * mk[l * d + j];
                next[i * d + j] = s;
            }
        for (std::size_t i = 0; i < d; ++i)
            next[i * d + i] += c[d - k + 1];
        mk = next;
        mpq_class trace = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                trace += a[i * d + l] * mk[l * d + i];
        c[d - k] = -trace / static_cast<long>(k);
    }
    std::vector<mpz_class> coeffs;
    for (const auto& q : c)
        coeffs.push_back(q.get_num()); // denominators are 1 for integer input
    return IntegerPolynomial(coeffs);
}

/// Hasse derivative multiplicity: least k with D^(k) P (eps) != 0 mod p,
/// D^(k) sum c_i X^i = sum C(i, k) c_i X^{i-k}.
inline std::uint64_t hasse_multiplicity(const std::vector<std::uint64_t>& coeffs, std::uint64_t eps,
                                        std::uint64_t p)
{
    for (std::uint64_t k = 0; k < coeffs.size(); ++k) {
        mpz_class value = 0;
        for (std::uint64_t i = k; i < coeffs.size(); ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), i, k);
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), eps, i - k);
            value += binom * coeffs[i] * power;
        }
        if (value % static_cast<unsigned long>(p) != 0)
            return k;
    }
    return coeffs.size();
}

/// Number of v in (Z/p)^d with M v = 0, by enumeration.
inline std::uint64_t brute_kernel_size(const IntegerMatrix& m, std::uint64_t p)
{
    const std::size_t d = m.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= p;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> v(d);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = c % p;
            c /= p;
        }
        bool zero = true;
        for (std::size_t i = 0; i < d && zero; ++i) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += m(i, j) * v[j];
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), p);
            zero = r == 0;
        }
        if (zero)
            ++count;
    }
    return count;
}

inline std::uint64_t log_base(std::uint64_t value, std::uint64_t base)
{
    std::uint64_t k = 0;
    while (value > 1) {
        value /= base;
        ++k;
    }
    return k;
}

/// gcd of all k x k minors (determinantal divisor), d <= 4.
inline mpz_class determinantal_divisor(const IntegerMatrix& m, std::size_t k)
{
    const std::size_t d = m.dimension();
    mpz_class g = 0;
    std::vector<bool> rows_mask(d), cols_mask(d);
    std::fill(rows_mask.begin(), rows_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::fill(cols_mask.begin(), cols_mask.end(), false);
        std::fill(cols_mask.begin(), cols_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            IntegerMatrix sub(k);
            std::size_t si = 0;
            for (std::size_t i = 0; i < d; ++i) {
                if (!rows_mask[i])
                    continue;
                std::size_t sj = 0;
                for (std::size_t j = 0; j < d; ++j)
                    if (cols_mask[j])
                        sub(si, sj++) = m(i, j);
                ++si;
            }
            mpz_class det = leibniz_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        } while (std::prev_permutation(cols_mask.begin(), cols_mask.end()));
    } while (std::prev_permutation(rows_mask.begin(), rows_mask.end()));
    return g;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t d, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntegerMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace oracle
