#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"
#include "cremona/ff_oracle.hpp"
#include "cremona/torus_rank.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace cremona;

namespace {

IntegerMatrix companion_of(std::uint64_t n)
{
    return IntegerMatrix::companion(cyclotomic_poly(n));
}

// dim of {v : sigma v = eps v} over Z/p by enumeration.
std::uint64_t brute_eigenspace(const IntegerMatrix& sigma, std::uint64_t eps, std::uint64_t p)
{
    IntegerMatrix shifted = sigma;
    for (std::size_t i = 0; i < sigma.dimension(); ++i)
        shifted(i, i) -= static_cast<long>(eps);
    return oracle::log_base(oracle::brute_kernel_size(shifted, p), p);
}

} // namespace

TEST_CASE("theorem_bound")
{
    CHECK(theorem_bound(2, 1) == 2);
    CHECK(theorem_bound(3, 4) == 1);
    CHECK(theorem_bound(1, 3) == 0);
    CHECK(theorem_bound(8, 20) == 1);
    CHECK_THROWS_AS(theorem_bound(0, 1), DomainError);
    CHECK_THROWS_AS(theorem_bound(1, 0), DomainError);
}

TEST_CASE("presentation validation")
{
    CHECK_THROWS_AS(GaloisTorusPresentation(IntegerMatrix{{1, 1}, {0, 1}}, 1), NotFiniteOrder);
    CHECK_THROWS_AS(GaloisTorusPresentation(IntegerMatrix::identity(2), 0), DomainError);
    CHECK(GaloisTorusPresentation(companion_of(6), 2).sigma_order() == 6);
}

TEST_CASE("fixed_point_rank examples")
{
    auto cert = fixed_point_rank(GaloisTorusPresentation(IntegerMatrix::identity(2), 1), PrimeModulus(5));
    CHECK(cert.eigenspace_rank == 2);
    CHECK(cert.upper_bound == 2);
    CHECK(cert.eps_used == 1);

    cert = fixed_point_rank(GaloisTorusPresentation(IntegerMatrix{{-1}}, 2), PrimeModulus(3));
    CHECK(cert.eigenspace_rank == 1);
    CHECK(cert.upper_bound == 1);
    CHECK(cert.eps_used == 2);

    cert = fixed_point_rank(GaloisTorusPresentation(companion_of(4), 4), PrimeModulus(5));
    CHECK(cert.eigenspace_rank == 1);
    CHECK(cert.upper_bound == 1);
    // smallest order-4 residue mod 5 is 2, inverse 3
    CHECK(cert.eps_used == 3);
    CHECK(cert.char_poly_indices.indices == std::vector<std::uint64_t>{4});

    CHECK_THROWS_AS(fixed_point_rank(GaloisTorusPresentation(companion_of(4), 4), PrimeModulus(7)), DomainError);
}

TEST_CASE("multiplicity_chain_check examples")
{
    auto report = multiplicity_chain_check(GaloisTorusPresentation(IntegerMatrix::identity(3), 1), PrimeModulus(7));
    CHECK(report.pass());
    REQUIRE(report.factors.size() == 3);
    for (const auto& f : report.factors) {
        CHECK(f.index == 1);
        CHECK(f.multiplicity == 1);
        CHECK(f.within_bound);
    }

    report = multiplicity_chain_check(GaloisTorusPresentation(companion_of(20), 4), PrimeModulus(5));
    CHECK(report.pass());
    REQUIRE(report.factors.size() == 1);
    CHECK(report.factors[0].multiplicity == 4);
    CHECK(report.factors[0].phi_index / report.phi_t == 4);
    CHECK(report.total_multiplicity == 4);
    CHECK(report.total_bound == 4);
    // Phi_20 mod 5 = (X^2+1)^4 is not semisimple: the eigenspace is smaller
    // than the algebraic multiplicity.
    CHECK(report.eigenspace_rank == 1);
    for (const auto& row : report.per_epsilon) {
        CHECK(row.char_poly_multiplicity == 4);
        CHECK(row.eigenspace_dim == 1);
    }

    report = multiplicity_chain_check(GaloisTorusPresentation(companion_of(3), 2), PrimeModulus(5));
    CHECK(report.pass());
    CHECK(report.factors[0].multiplicity == 0);
    CHECK(report.eigenspace_rank == 0);
}

TEST_CASE("sharp_construction examples")
{
    auto pres = sharp_construction(1, 1);
    CHECK(pres.sigma() == IntegerMatrix{{1}});
    CHECK(fixed_point_rank(pres, PrimeModulus(2)).eigenspace_rank == 1);

    pres = sharp_construction(2, 4);
    CHECK(pres.sigma() == IntegerMatrix({{0, -1}, {1, 0}}));
    CHECK(fixed_point_rank(pres, PrimeModulus(5)).eigenspace_rank == 1);

    pres = sharp_construction(4, 3);
    CHECK(pres.sigma() == IntegerMatrix({{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}}));
    CHECK(fixed_point_rank(pres, PrimeModulus(7)).eigenspace_rank == 2);

    pres = sharp_construction(5, 4);
    CHECK(pres.sigma()(4, 4) == 1);
    CHECK(pres.chi_order() == 4);

    CHECK_THROWS_AS(sharp_construction(1, 3), DomainError);
    CHECK_THROWS_AS(sharp_construction(3, 5), DomainError);
}

TEST_CASE("sharp_construction attains the bound at the three smallest admissible primes")
{
    for (std::uint64_t t : {1, 2, 3, 4, 6}) {
        const auto primes = smallest_primes_one_mod(t, 3);
        for (std::uint64_t d = euler_phi(t); d <= 6; ++d) {
            const auto pres = sharp_construction(d, t);
            for (const auto& p : primes) {
                const auto cert = fixed_point_rank(pres, p);
                REQUIRE(cert.eigenspace_rank == theorem_bound(d, t));
                REQUIRE(cert.eigenspace_rank == cert.upper_bound);
            }
        }
    }
}

TEST_CASE("eigenspace rank agrees with enumeration and stays under the bound")
{
    std::mt19937_64 rng(23);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        const IntegerMatrix sigma = random_finite_order_matrix(rng, d);
        const PrimeModulus p(primes[rng() % primes.size()]);
        const auto orders = divisors(p.value() - 1);
        const std::uint64_t t = orders[rng() % orders.size()];
        const GaloisTorusPresentation pres(sigma, t);
        const auto cert = fixed_point_rank(pres, p);
        REQUIRE(cert.eigenspace_rank == brute_eigenspace(sigma, cert.eps_used, p.value()));
        REQUIRE(cert.eigenspace_rank <= cert.upper_bound);
        const auto chain = multiplicity_chain_check(pres, p);
        REQUIRE_MESSAGE(chain.pass(), sigma.to_string());
    }
}

TEST_CASE("char-poly multiplicity is the same for every order-t residue")
{
    std::mt19937_64 rng(29);
    const std::vector<std::uint64_t> primes{5, 7, 11, 13, 31};
    for (int trial = 0; trial < 200; ++trial) {
        const IntegerMatrix sigma = random_finite_order_matrix(rng, 1 + rng() % 6);
        const PrimeModulus p(primes[rng() % primes.size()]);
        for (std::uint64_t t : divisors(p.value() - 1)) {
            const auto report = multiplicity_chain_check(GaloisTorusPresentation(sigma, t), p);
            for (const auto& row : report.per_epsilon)
                REQUIRE(row.char_poly_multiplicity == report.total_multiplicity);
        }
    }
}

TEST_CASE("fixed_point_rank is invariant under unimodular change of basis")
{
    std::mt19937_64 rng(31);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    for (int base = 0; base < 20; ++base) {
        const IntegerMatrix sigma = random_finite_order_matrix(rng, 1 + rng() % 6);
        const PrimeModulus p(primes[rng() % primes.size()]);
        const auto orders = divisors(p.value() - 1);
        const std::uint64_t t = orders[rng() % orders.size()];
        const auto reference = fixed_point_rank(GaloisTorusPresentation(sigma, t), p);
        for (int k = 0; k < 25; ++k) {
            const auto [u, u_inv] = random_unimodular(rng, sigma.dimension());
            REQUIRE((u * u_inv).is_identity());
            const auto moved = fixed_point_rank(GaloisTorusPresentation(u * sigma * u_inv, t), p);
            REQUIRE(moved.eigenspace_rank == reference.eigenspace_rank);
            REQUIRE(moved.char_poly_indices == reference.char_poly_indices);
        }
    }
}
