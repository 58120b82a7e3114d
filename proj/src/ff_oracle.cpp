#include "cremona/ff_oracle.hpp"

#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cremona {

FiniteFieldTorus::FiniteFieldTorus(std::uint64_t q, IntegerMatrix sigma)
    : q_(q), characteristic_(0), sigma_(std::move(sigma))
{
    if (q > kMaxFieldSize)
        throw DomainError("field size " + std::to_string(q) + " exceeds the supported 2^20");
    characteristic_ = as_prime_power(q).prime;
    matrix_order(sigma_);
}

IntegerMatrix FiniteFieldTorus::frobenius_shift() const
{
    return mpz_class(static_cast<unsigned long>(q_)) * sigma_ - IntegerMatrix::identity(dimension());
}

mpz_class AbelianGroupInvariants::order() const
{
    mpz_class n = 1;
    for (const auto& s : invariants)
        n *= s;
    return n;
}

std::string AbelianGroupInvariants::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < invariants.size(); ++i)
        out << (i ? " x " : "") << "Z/" << invariants[i].get_str();
    return out.str();
}

AbelianGroupInvariants rational_points_structure(const FiniteFieldTorus& tor)
{
    SmithInvariants snf = smith_normal_form(tor.frobenius_shift());
    for (const auto& s : snf.invariants)
        if (s == 0)
            throw VerificationFailure("q sigma - I is singular for sigma = " + tor.sigma().to_string());
    return {std::move(snf.invariants)};
}

std::uint64_t p_elementary_rank(const AbelianGroupInvariants& group, const PrimeModulus& p)
{
    return static_cast<std::uint64_t>(
        std::count_if(group.invariants.begin(), group.invariants.end(), [&](const mpz_class& s) {
            return mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p.value())) != 0;
        }));
}

std::uint64_t t_of_finite_field(std::uint64_t q, const PrimeModulus& p)
{
    if (q % p.value() == 0)
        throw DomainError("p = " + std::to_string(p.value()) + " divides q = " + std::to_string(q) +
                          " (p must differ from the characteristic)");
    return multiplicative_order(static_cast<std::int64_t>(q % p.value()), p);
}

mpz_class group_order(const FiniteFieldTorus& tor)
{
    return abs(determinant(tor.frobenius_shift()));
}

// ---------------------------------------------------------------------------

UnimodularPair random_unimodular(std::mt19937_64& rng, std::size_t dimension, int steps)
{
    UnimodularPair pair{IntegerMatrix::identity(dimension), IntegerMatrix::identity(dimension)};
    if (dimension == 1) {
        if (rng() & 1) {
            pair.forward(0, 0) = -1;
            pair.inverse(0, 0) = -1;
        }
        return pair;
    }
    std::uniform_int_distribution<std::size_t> pick(0, dimension - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> multiplier(1, 2);

    auto& u = pair.forward;
    auto& v = pair.inverse;
    for (int step = 0; step < steps; ++step) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        while (j == i)
            j = pick(rng);
        switch (kind(rng)) {
        case 0: // swap rows i, j of U; columns i, j of U^{-1}
            for (std::size_t k = 0; k < dimension; ++k) {
                std::swap(u(i, k), u(j, k));
                std::swap(v(k, i), v(k, j));
            }
            break;
        case 1: // negate row i of U; column i of U^{-1}
            for (std::size_t k = 0; k < dimension; ++k) {
                u(i, k) = -u(i, k);
                v(k, i) = -v(k, i);
            }
            break;
        default: { // row_i += c row_j on U; col_j -= c col_i on U^{-1}
            const int c = multiplier(rng) * ((rng() & 1) ? 1 : -1);
            bool in_range = true;
            for (std::size_t k = 0; k < dimension && in_range; ++k) {
                const mpz_class candidate = u(i, k) + c * u(j, k);
                in_range = abs(candidate) <= 2;
            }
            if (!in_range)
                break;
            for (std::size_t k = 0; k < dimension; ++k) {
                u(i, k) += c * u(j, k);
                v(k, j) -= c * v(k, i);
            }
            break;
        }
        }
    }
    return pair;
}

IntegerMatrix random_finite_order_matrix(std::mt19937_64& rng, std::size_t dimension)
{
    std::vector<IntegerMatrix> blocks;
    std::size_t remaining = dimension;
    while (remaining > 0) {
        if (rng() % 2 == 0) {
            std::vector<std::uint64_t> indices;
            for (std::uint64_t m = 1; m <= 12; ++m)
                if (euler_phi(m) <= remaining)
                    indices.push_back(m);
            const std::uint64_t m = indices[rng() % indices.size()];
            blocks.push_back(IntegerMatrix::companion(cyclotomic_poly(m)));
            remaining -= euler_phi(m);
        } else {
            const std::size_t size = 1 + rng() % remaining;
            std::vector<std::size_t> perm(size);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            IntegerMatrix block(size);
            for (std::size_t col = 0; col < size; ++col)
                block(perm[col], col) = (rng() & 1) ? 1 : -1;
            blocks.push_back(std::move(block));
            remaining -= size;
        }
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    const auto [u, u_inv] = random_unimodular(rng, dimension);
    return u * IntegerMatrix::block_diagonal(blocks) * u_inv;
}

// ---------------------------------------------------------------------------

OracleSweepReport oracle_sweep(const OracleSweepConfig& config)
{
    OracleSweepReport report;
    report.config = config;
    std::vector<PrimeModulus> primes;
    for (std::uint64_t p : config.primes)
        primes.emplace_back(p);
    std::sort(primes.begin(), primes.end());
    std::vector<std::uint64_t> field_sizes = config.field_sizes;
    std::sort(field_sizes.begin(), field_sizes.end());
    for (std::uint64_t q : field_sizes)
        as_prime_power(q);

    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(1, config.max_dimension));

    for (std::size_t index = 0; index < config.tori; ++index) {
        const std::size_t d = dim_dist(rng);
        const IntegerMatrix sigma = random_finite_order_matrix(rng, d);
        ++report.tori;
        for (std::uint64_t q : field_sizes) {
            const FiniteFieldTorus tor(q, sigma);
            const AbelianGroupInvariants group = rational_points_structure(tor);
            const IntegerMatrix shift = tor.frobenius_shift();
            auto violate = [&](std::uint64_t p, std::string check, std::string detail) {
                report.violations.push_back({index, q, p, sigma.to_string(), std::move(check), std::move(detail)});
            };

            if (group.order() != group_order(tor))
                violate(0, "order", "product of invariants " + group.order().get_str() +
                                        " != |det| " + group_order(tor).get_str());

            for (const auto& p : primes) {
                if (q % p.value() == 0)
                    continue;
                ++report.cases;
                const std::uint64_t rank = p_elementary_rank(group, p);
                const std::uint64_t kernel = kernel_dim_mod_p(shift, p);
                const std::uint64_t eps = inverse_mod(q % p.value(), p);
                const std::uint64_t eigen = eigenspace_dim(sigma, eps, p);
                const std::uint64_t t = t_of_finite_field(q, p);
                const std::uint64_t bound = theorem_bound(d, t);
                report.max_rank_seen = std::max<std::size_t>(report.max_rank_seen, rank);

                if (rank != kernel || kernel != eigen)
                    violate(p.value(), "equivalence",
                            "p-rank " + std::to_string(rank) + ", kernel " + std::to_string(kernel) +
                                ", eigenspace " + std::to_string(eigen));
                if (rank > bound)
                    violate(p.value(), "bound",
                            "p-rank " + std::to_string(rank) + " > floor(" + std::to_string(d) +
                                "/phi(" + std::to_string(t) + ")) = " + std::to_string(bound));
            }
        }
    }
    return report;
}

bool SharpnessReport::pass() const noexcept
{
    return std::all_of(rows.begin(), rows.end(), [](const SharpnessRow& r) { return r.attained; });
}

std::uint64_t smallest_field_with_order(std::uint64_t t, const PrimeModulus& p)
{
    if ((p.value() - 1) % t != 0)
        throw DomainError("no field has t = " + std::to_string(t) + " at p = " + std::to_string(p.value()));
    for (std::uint64_t q = 2; q <= kMaxFieldSize; ++q) {
        if (q % p.value() == 0 || factorize(q).size() != 1)
            continue;
        if (t_of_finite_field(q, p) == t)
            return q;
    }
    throw DomainError("no prime power up to 2^20 has order " + std::to_string(t) + " mod " +
                      std::to_string(p.value()));
}

std::vector<PrimeModulus> smallest_primes_one_mod(std::uint64_t t, std::size_t count)
{
    if (t == 0)
        throw DomainError("t must be at least 1");
    std::vector<PrimeModulus> out;
    for (std::uint64_t p = 2; out.size() < count; ++p)
        if ((p - 1) % t == 0 && is_prime(p))
            out.emplace_back(p);
    return out;
}

SharpnessReport sharpness_sweep(const std::vector<std::uint64_t>& orders, std::uint64_t max_dimension)
{
    SharpnessReport report;
    for (std::uint64_t t : orders) {
        const auto primes = smallest_primes_one_mod(t, 3);
        const PrimeModulus& oracle_p = primes.front();
        const std::uint64_t q = smallest_field_with_order(t, oracle_p);
        for (std::uint64_t d = euler_phi(t); d <= max_dimension; ++d) {
            const GaloisTorusPresentation pres = sharp_construction(d, t);
            SharpnessRow row;
            row.t = t;
            row.d = d;
            row.bound = theorem_bound(d, t);
            row.attained = true;
            for (const auto& p : primes) {
                row.primes.push_back(p.value());
                row.fixed_point_ranks.push_back(fixed_point_rank(pres, p).eigenspace_rank);
                row.attained = row.attained && row.fixed_point_ranks.back() == row.bound;
            }
            const FiniteFieldTorus tor(q, pres.sigma());
            const AbelianGroupInvariants group = rational_points_structure(tor);
            row.oracle_p = oracle_p.value();
            row.oracle_q = q;
            row.oracle_rank = p_elementary_rank(group, oracle_p);
            row.group = group.to_string();
            row.attained = row.attained && row.oracle_rank == row.bound;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace cremona
