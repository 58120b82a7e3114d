#include "cremona/torus_rank.hpp"

#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"

#include <algorithm>

namespace cremona {

namespace {

std::uint64_t validated_chi_order(std::uint64_t t)
{
    if (t == 0)
        throw DomainError("character order t must be at least 1");
    return t;
}

void require_realizable(std::uint64_t t, const PrimeModulus& p)
{
    if ((p.value() - 1) % t != 0)
        throw DomainError("no Galois element realizes character order " + std::to_string(t) +
                          " at p = " + std::to_string(p.value()) + " (t must divide p - 1)");
}

} // namespace

GaloisTorusPresentation::GaloisTorusPresentation(IntegerMatrix sigma, std::uint64_t chi_order)
    : sigma_(std::move(sigma)), chi_order_(validated_chi_order(chi_order)),
      sigma_order_(matrix_order(sigma_))
{
}

std::uint64_t theorem_bound(std::uint64_t d, std::uint64_t t)
{
    if (d == 0 || t == 0)
        throw DomainError("theorem_bound needs d >= 1 and t >= 1");
    return d / euler_phi(t);
}

std::uint64_t canonical_epsilon(std::uint64_t t, const PrimeModulus& p)
{
    return inverse_mod(residues_of_order(t, p).front(), p);
}

std::uint64_t eigenspace_dim(const IntegerMatrix& sigma, std::uint64_t eps, const PrimeModulus& p)
{
    IntegerMatrix shifted = sigma;
    for (std::size_t i = 0; i < shifted.dimension(); ++i)
        shifted(i, i) -= static_cast<unsigned long>(eps);
    return kernel_dim_mod_p(shifted, p);
}

RankCertificate fixed_point_rank(const GaloisTorusPresentation& pres, const PrimeModulus& p)
{
    const std::uint64_t t = pres.chi_order();
    require_realizable(t, p);
    RankCertificate cert;
    cert.eps_used = canonical_epsilon(t, p);
    cert.upper_bound = theorem_bound(pres.dimension(), t);
    cert.char_poly_indices = cyclotomic_factorization(char_poly(pres.sigma()));
    cert.eigenspace_rank = eigenspace_dim(pres.sigma(), cert.eps_used, p);
    if (cert.eigenspace_rank > cert.upper_bound)
        throw VerificationFailure("eigenspace rank " + std::to_string(cert.eigenspace_rank) +
                                  " exceeds floor(d/phi(t)) = " + std::to_string(cert.upper_bound) +
                                  " for sigma = " + pres.sigma().to_string());
    return cert;
}

MultiplicityChainReport multiplicity_chain_check(const GaloisTorusPresentation& pres,
                                                 const PrimeModulus& p)
{
    const std::uint64_t t = pres.chi_order();
    require_realizable(t, p);

    MultiplicityChainReport report;
    report.p = p.value();
    report.t = t;
    report.phi_t = euler_phi(t);
    report.d = pres.dimension();
    report.eps = canonical_epsilon(t, p);
    report.total_bound = theorem_bound(report.d, t);

    const IntegerPolynomial f = char_poly(pres.sigma());
    const CyclotomicFactorization factors = cyclotomic_factorization(f);

    std::uint64_t summed = 0;
    for (std::uint64_t index : factors.indices) {
        FactorMultiplicity row;
        row.index = index;
        row.phi_index = euler_phi(index);
        row.multiplicity = root_multiplicity(reduce_mod(cyclotomic_poly(index), p), report.eps);
        row.within_bound = row.multiplicity * report.phi_t <= row.phi_index;
        if (!row.within_bound)
            report.failures.push_back("multiplicity " + std::to_string(row.multiplicity) +
                                      " of eps in Phi_" + std::to_string(index) +
                                      " mod p exceeds phi(d_i)/phi(t)");
        summed += row.multiplicity;
        report.factors.push_back(row);
    }

    const ModularPolynomial fbar = reduce_mod(f, p);
    report.total_multiplicity = root_multiplicity(fbar, report.eps);
    if (report.total_multiplicity != summed)
        report.failures.push_back("multiplicity in F mod p (" + std::to_string(report.total_multiplicity) +
                                  ") differs from the sum over factors (" + std::to_string(summed) + ")");
    if (report.total_multiplicity * report.phi_t > report.d)
        report.failures.push_back("multiplicity of eps in F mod p exceeds d/phi(t)");
    if (factors.degree() != report.d)
        report.failures.push_back("sum of phi(d_i) differs from d");

    report.eigenspace_rank = eigenspace_dim(pres.sigma(), report.eps, p);
    if (report.eigenspace_rank > report.total_multiplicity)
        report.failures.push_back("eigenspace dimension exceeds algebraic multiplicity");

    for (std::uint64_t residue : residues_of_order(t, p)) {
        const std::uint64_t eps = inverse_mod(residue, p);
        report.per_epsilon.push_back({eps, root_multiplicity(fbar, eps), eigenspace_dim(pres.sigma(), eps, p)});
    }
    std::sort(report.per_epsilon.begin(), report.per_epsilon.end(),
              [](const EpsilonRow& a, const EpsilonRow& b) { return a.eps < b.eps; });
    for (const auto& row : report.per_epsilon) {
        if (row.char_poly_multiplicity != report.total_multiplicity)
            report.failures.push_back("multiplicity at eps = " + std::to_string(row.eps) +
                                      " differs from the canonical eps");
        if (row.eigenspace_dim > report.total_bound)
            report.failures.push_back("eigenspace at eps = " + std::to_string(row.eps) +
                                      " exceeds floor(d/phi(t))");
    }
    return report;
}

GaloisTorusPresentation sharp_construction(std::uint64_t d, std::uint64_t t)
{
    if (d == 0 || t == 0)
        throw DomainError("sharp_construction needs d >= 1 and t >= 1");
    const std::uint64_t phi_t = euler_phi(t);
    if (phi_t > d)
        throw DomainError("phi(" + std::to_string(t) + ") = " + std::to_string(phi_t) +
                          " exceeds d = " + std::to_string(d) + "; the bound is 0 and has no witness");
    const std::uint64_t blocks = d / phi_t;
    const IntegerMatrix block = IntegerMatrix::companion(cyclotomic_poly(t));
    std::vector<IntegerMatrix> parts(blocks, block);
    if (const std::uint64_t rest = d - blocks * phi_t; rest > 0)
        parts.push_back(IntegerMatrix::identity(rest));
    return GaloisTorusPresentation(IntegerMatrix::block_diagonal(parts), t);
}

} // namespace cremona
