#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <map>

using namespace cremona;

namespace {

// Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d by dense long division.
IntegerPolynomial division_recursion(std::uint64_t n, std::map<std::uint64_t, IntegerPolynomial>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    IntegerPolynomial result = IntegerPolynomial::x_pow_minus_one(n);
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0)
            result = exact_quotient(result, division_recursion(d, memo));
    memo.emplace(n, result);
    return result;
}

} // namespace

TEST_CASE("cyclotomic_poly small cases")
{
    CHECK(cyclotomic_poly(1) == IntegerPolynomial{-1, 1});
    CHECK(cyclotomic_poly(2) == IntegerPolynomial{1, 1});
    CHECK(cyclotomic_poly(12) == IntegerPolynomial{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(12).to_string() == "X^4 - X^2 + 1");
    CHECK_THROWS_AS(cyclotomic_poly(0), DomainError);
    CHECK_THROWS_AS(cyclotomic_poly(kMaxCyclotomicIndex + 1), DomainError);
}

TEST_CASE("105 is the first index with a coefficient of absolute value above 1")
{
    for (std::uint64_t n = 1; n < 105; ++n) {
        const IntegerPolynomial phi = cyclotomic_poly(n);
        for (const auto& c : phi.coefficients())
            REQUIRE(abs(c) <= 1);
    }
    const IntegerPolynomial phi105 = cyclotomic_poly(105);
    const auto& c = phi105.coefficients();
    CHECK(std::count(c.begin(), c.end(), mpz_class(-2)) >= 1);
}

TEST_CASE("cyclotomic_poly matches the division recursion")
{
    std::map<std::uint64_t, IntegerPolynomial> memo;
    for (std::uint64_t n = 1; n <= 300; ++n)
        REQUIRE_MESSAGE(cyclotomic_poly(n) == division_recursion(n, memo), n);
}

TEST_CASE("product over divisors is X^n - 1 and degrees are phi(n)")
{
    for (std::uint64_t n = 1; n <= 200; ++n) {
        IntegerPolynomial product{1};
        for (std::uint64_t d : divisors(n))
            product *= cyclotomic_poly(d);
        REQUIRE(product == IntegerPolynomial::x_pow_minus_one(n));
    }
    for (std::uint64_t n = 1; n <= 500; ++n)
        REQUIRE(cyclotomic_poly(n).degree() == static_cast<int>(euler_phi(n)));
}

TEST_CASE("large indices stay exact")
{
    const IntegerPolynomial big = cyclotomic_poly(1'000'000);
    CHECK(big.degree() == 400000);
    CHECK(big == cyclotomic_poly(10).substitute_power(100000));

    const IntegerPolynomial wide = cyclotomic_poly(510510);
    CHECK(wide.degree() == static_cast<int>(euler_phi(510510)));
    CHECK(wide.is_monic());
    // Phi_n(1) = p for prime powers, 1 when n has two distinct prime factors.
    CHECK(wide.evaluate(1) == 1);
    CHECK(cyclotomic_poly(3 * 3 * 3 * 3 * 3 * 3 * 3).evaluate(1) == 3);
}

TEST_CASE("reduce_mod")
{
    CHECK(reduce_mod(IntegerPolynomial{1, -1, 1}, PrimeModulus(2)) ==
          ModularPolynomial(PrimeModulus(2), {1, 1, 1}));
    CHECK(reduce_mod(cyclotomic_poly(6), PrimeModulus(2)) == reduce_mod(cyclotomic_poly(3), PrimeModulus(2)));
    CHECK(reduce_mod(cyclotomic_poly(4), PrimeModulus(5)) == ModularPolynomial(PrimeModulus(5), {1, 0, 1}));
    CHECK(reduce_mod(IntegerPolynomial{-7, 0, 5}, PrimeModulus(5)).degree() == 0);
}

TEST_CASE("root_multiplicity examples")
{
    CHECK(root_multiplicity(ModularPolynomial(PrimeModulus(5), {1, 0, 1}), 2) == 1);
    CHECK(root_multiplicity(reduce_mod(IntegerPolynomial{1, 3, 3, 1}, PrimeModulus(3)), 2) == 3);
    CHECK(root_multiplicity(ModularPolynomial(PrimeModulus(3), {1, 0, 1}), 1) == 0);
    CHECK_THROWS_AS(root_multiplicity(ModularPolynomial(PrimeModulus(3)), 1), DomainError);
}

TEST_CASE("root_multiplicity agrees with the Hasse-derivative oracle")
{
    std::mt19937_64 rng(7);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 1000; ++trial) {
        const PrimeModulus p(primes[rng() % primes.size()]);
        // Random product of linear factors and a random cofactor so that
        // high multiplicities actually occur.
        ModularPolynomial poly(p, {1 + rng() % (p.value() - 1)});
        const int linear = static_cast<int>(rng() % 6);
        for (int i = 0; i < linear; ++i)
            poly = poly * ModularPolynomial(p, {p.value() - rng() % 3 % p.value(), 1});
        std::vector<std::uint64_t> cofactor(1 + rng() % 4);
        for (auto& c : cofactor)
            c = rng() % p.value();
        cofactor.back() = 1;
        poly = poly * ModularPolynomial(p, cofactor);
        const std::uint64_t eps = rng() % p.value();
        REQUIRE(root_multiplicity(poly, eps) == oracle::hasse_multiplicity(poly.coefficients(), eps, p.value()));
    }
}

TEST_CASE("order_t_multiplicity examples")
{
    const PrimeModulus five(5);
    CHECK(order_t_multiplicity(4, five, 4) == 1);
    CHECK(order_t_multiplicity(20, five, 4) == 4);
    CHECK(order_t_multiplicity(3, five, 2) == 0);
    CHECK_THROWS_AS(order_t_multiplicity(4, five, 3), DomainError);
}

TEST_CASE("prime-power identity Phi_{nq} = Phi_n^{phi(q)} mod p")
{
    for (std::uint64_t pv : {2, 3, 5, 7}) {
        const PrimeModulus p(pv);
        for (std::uint64_t n = 1; n <= 30; ++n) {
            if (n % pv == 0)
                continue;
            std::uint64_t q = 1;
            for (int f = 1; f <= 2; ++f) {
                q *= pv;
                REQUIRE(reduce_mod(cyclotomic_poly(n * q), p) == pow(reduce_mod(cyclotomic_poly(n), p), euler_phi(q)));
            }
        }
    }
}

TEST_CASE("positivity iff n = t p^f")
{
    for (std::uint64_t pv : {2, 3, 5, 7, 11}) {
        const PrimeModulus p(pv);
        for (std::uint64_t n = 1; n <= 60; ++n)
            for (std::uint64_t t : divisors(pv - 1)) {
                const std::uint64_t m = order_t_multiplicity(n, p, t);
                REQUIRE((m > 0) == is_t_times_p_power(n, t, pv));
                if (m > 0) {
                    std::uint64_t q = n / t;
                    REQUIRE(m == euler_phi(q));
                }
            }
    }
}

TEST_CASE("verify_lemma_range")
{
    const auto single = verify_lemma_range(1, {PrimeModulus(2)});
    CHECK(single.pass());
    CHECK(single.triples_checked == 1);

    const auto sweep = verify_lemma_range(
        60, {PrimeModulus(2), PrimeModulus(3), PrimeModulus(5), PrimeModulus(7), PrimeModulus(11)});
    CHECK(sweep.pass());
    CHECK(sweep.counterexamples.empty());
    CHECK(sweep.identity_checks > 0);
    CHECK(sweep.root_count_checks > 0);

    const PrimeModulus thirteen(13);
    CHECK(verify_lemma_range(20, {thirteen}).pass());
    const ModularPolynomial phi12 = reduce_mod(cyclotomic_poly(12), thirteen);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 1; r < 13; ++r)
        if (phi12.evaluate(r) == 0) {
            roots.push_back(r);
            CHECK(root_multiplicity(phi12, r) == 1);
            CHECK(multiplicative_order(static_cast<std::int64_t>(r), thirteen) == 12);
        }
    CHECK(roots == std::vector<std::uint64_t>{2, 6, 7, 11});
}
