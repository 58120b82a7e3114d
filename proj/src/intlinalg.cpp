#include "cremona/intlinalg.hpp"

#include "cremona/cyclotomic.hpp"
#include "cremona/errors.hpp"

#include <algorithm>

namespace cremona {

namespace {

void check_dimension(const IntegerMatrix& m, const char* op)
{
    if (m.dimension() > kMaxMatrixDimension)
        throw DomainError(std::string(op) + ": dimension " + std::to_string(m.dimension()) +
                          " exceeds the supported maximum " + std::to_string(kMaxMatrixDimension));
}

mpz_class bareiss(std::vector<mpz_class> a, std::size_t n)
{
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
    mpz_class previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, k) = 0;
        }
        previous = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

} // namespace

mpz_class determinant(const IntegerMatrix& m)
{
    return bareiss(m.entries(), m.dimension());
}

IntegerPolynomial char_poly(const IntegerMatrix& m)
{
    check_dimension(m, "char_poly");
    const std::size_t d = m.dimension();

    // values[x] = det(x I - M) for x = 0..d
    std::vector<mpz_class> diff(d + 1);
    for (std::size_t x = 0; x <= d; ++x) {
        IntegerMatrix shifted = -m;
        for (std::size_t i = 0; i < d; ++i)
            shifted(i, i) += static_cast<unsigned long>(x);
        diff[x] = determinant(shifted);
    }

    // Newton coefficients at nodes 0..d: c_k = Delta^k f(0) / k!.
    std::vector<mpz_class> newton(d + 1);
    mpz_class factorial = 1;
    for (std::size_t k = 0; k <= d; ++k) {
        if (k > 0) {
            factorial *= static_cast<unsigned long>(k);
            for (std::size_t i = d; i >= k; --i)
                diff[i] -= diff[i - 1];
        }
        if (!mpz_divisible_p(diff[k].get_mpz_t(), factorial.get_mpz_t()))
            throw VerificationFailure("non-integral Newton coefficient in char_poly");
        mpz_divexact(newton[k].get_mpz_t(), diff[k].get_mpz_t(), factorial.get_mpz_t());
    }

    // Horner expansion of sum c_k prod_{j<k} (X - j).
    IntegerPolynomial poly(std::vector<mpz_class>{newton[d]});
    for (std::size_t k = d; k-- > 0;) {
        poly *= IntegerPolynomial{-static_cast<long>(k), 1};
        poly += IntegerPolynomial(std::vector<mpz_class>{newton[k]});
    }
    if (poly.degree() != static_cast<int>(d) || !poly.is_monic())
        throw VerificationFailure("characteristic polynomial is not monic of degree d");
    return poly;
}

std::uint64_t CyclotomicFactorization::degree() const
{
    std::uint64_t total = 0;
    for (std::uint64_t d : indices)
        total += euler_phi(d);
    return total;
}

std::uint64_t CyclotomicFactorization::index_lcm() const
{
    std::uint64_t l = 1;
    for (std::uint64_t d : indices)
        l = lcm(l, d);
    return l;
}

CyclotomicFactorization cyclotomic_factorization(const IntegerPolynomial& f)
{
    if (!f.is_monic() || f.degree() < 1)
        throw DomainError("cyclotomic_factorization needs a monic polynomial of positive degree, got " +
                          f.to_string());
    const auto deg = static_cast<std::uint64_t>(f.degree());
    const std::uint64_t bound = 2 * deg * deg + 6;

    CyclotomicFactorization result;
    IntegerPolynomial rest = f;
    for (std::uint64_t d = 1; d <= bound && rest.degree() > 0; ++d) {
        if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree()))
            continue;
        const IntegerPolynomial phi = cyclotomic_poly(d);
        while (rest.degree() >= phi.degree()) {
            auto [quotient, remainder] = divide_monic(rest, phi);
            if (!remainder.is_zero())
                break;
            rest = std::move(quotient);
            result.indices.push_back(d);
        }
    }
    if (rest != IntegerPolynomial{1})
        throw NotCyclotomicProduct(f.to_string() + " is not a product of cyclotomic polynomials");
    return result;
}

std::uint64_t matrix_order(const IntegerMatrix& m)
{
    check_dimension(m, "matrix_order");
    CyclotomicFactorization factors;
    try {
        factors = cyclotomic_factorization(char_poly(m));
    } catch (const NotCyclotomicProduct& e) {
        throw NotFiniteOrder("matrix " + m.to_string() + " has infinite order: " + e.what());
    }
    const std::uint64_t order = factors.index_lcm();
    if (!pow(m, order).is_identity())
        throw NotFiniteOrder("matrix " + m.to_string() + " is not semisimple: M^" +
                             std::to_string(order) + " != I");
    return order;
}

SmithInvariants smith_normal_form(const IntegerMatrix& input)
{
    check_dimension(input, "smith_normal_form");
    const std::size_t n = input.dimension();
    IntegerMatrix a = input;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n; ++j)
            std::swap(a(r1, j), a(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < n; ++i)
            std::swap(a(i, c1), a(i, c2));
    };

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Pivot: entry of least absolute value in the trailing block.
            std::size_t pr = n, pc = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a(i, j) != 0 &&
                        (pr == n || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n)
                break; // trailing block is zero
            swap_rows(k, pr);
            swap_cols(k, pc);

            bool clean = true;
            mpz_class q;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a(i, k) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
                for (std::size_t j = k; j < n; ++j)
                    mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
                clean = clean && a(i, k) == 0;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a(k, j) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
                for (std::size_t i = k; i < n; ++i)
                    mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
                clean = clean && a(k, j) == 0;
            }
            if (!clean)
                continue;

            // Pivot must divide the whole trailing block; otherwise fold the
            // offending row into row k and reduce again.
            std::size_t offender = n;
            for (std::size_t i = k + 1; i < n && offender == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (offender == n)
                break;
            for (std::size_t j = k; j < n; ++j)
                a(k, j) += a(offender, j);
        }
    }

    SmithInvariants out;
    out.invariants.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.invariants.push_back(abs(a(i, i)));
    // Zero pivots only appear once the trailing block vanished, so they are
    // already last; the loop above enforces the divisibility chain.
    return out;
}

std::size_t rank_mod_p(const IntegerMatrix& m, const PrimeModulus& p)
{
    check_dimension(m, "rank_mod_p");
    const std::size_t n = m.dimension();
    const std::uint64_t pv = p.value();
    const mpz_class modulus(static_cast<unsigned long>(pv));
    std::vector<std::uint64_t> a(n * n);
    mpz_class r;
    for (std::size_t k = 0; k < n * n; ++k) {
        mpz_fdiv_r(r.get_mpz_t(), m.entries()[k].get_mpz_t(), modulus.get_mpz_t());
        a[k] = r.get_ui();
    }
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(at(rank, j), at(pivot, j));
        const std::uint64_t inv = inverse_mod(at(rank, col), p);
        for (std::size_t j = col; j < n; ++j)
            at(rank, j) = at(rank, j) * inv % pv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || at(i, col) == 0)
                continue;
            const std::uint64_t factor = at(i, col);
            for (std::size_t j = col; j < n; ++j)
                at(i, j) = (at(i, j) + (pv - factor) * at(rank, j)) % pv;
        }
        ++rank;
    }
    return rank;
}

std::size_t kernel_dim_mod_p(const IntegerMatrix& m, const PrimeModulus& p)
{
    return m.dimension() - rank_mod_p(m, p);
}

} // namespace cremona
