#include "cremona/polynomial.hpp"

#include "cremona/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

namespace {

template <typename Coefficient, typename IsNegative, typename Magnitude>
std::string format_terms(const std::vector<Coefficient>& coeffs, IsNegative is_negative,
                         Magnitude magnitude)
{
    if (coeffs.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0)
            continue;
        const bool negative = is_negative(coeffs[i]);
        const std::string mag = magnitude(coeffs[i]);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << mag;
            continue;
        }
        if (mag != "1")
            out << mag << '*';
        out << 'X';
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

} // namespace

// ---------------------------------------------------------------------------
// IntegerPolynomial

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients))
{
    normalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    normalize();
}

IntegerPolynomial IntegerPolynomial::monomial(std::size_t degree, const mpz_class& coefficient)
{
    std::vector<mpz_class> coeffs(degree + 1);
    coeffs[degree] = coefficient;
    return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial IntegerPolynomial::x_pow_minus_one(std::size_t n)
{
    std::vector<mpz_class> coeffs(n + 1);
    coeffs[n] += 1;
    coeffs[0] -= 1;
    return IntegerPolynomial(std::move(coeffs));
}

void IntegerPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

bool IntegerPolynomial::is_monic() const
{
    return !coeffs_.empty() && coeffs_.back() == 1;
}

mpz_class IntegerPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

const mpz_class& IntegerPolynomial::leading() const
{
    if (coeffs_.empty())
        throw DomainError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

IntegerPolynomial IntegerPolynomial::substitute_power(std::size_t k) const
{
    if (k == 0)
        throw DomainError("substitute_power requires k >= 1");
    if (coeffs_.empty())
        return {};
    std::vector<mpz_class> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i * k] = coeffs_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& other)
{
    *this = *this * other;
    return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const
{
    return format_terms(
        coeffs_, [](const mpz_class& c) { return sgn(c) < 0; },
        [](const mpz_class& c) { return mpz_class(abs(c)).get_str(); });
}

IntegerDivision divide_monic(const IntegerPolynomial& dividend, const IntegerPolynomial& divisor)
{
    if (!divisor.is_monic())
        throw DomainError("divisor must be monic: " + divisor.to_string());
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    std::vector<mpz_class> rem = dividend.coefficients();
    if (rem.size() <= dd)
        return {IntegerPolynomial{}, dividend};

    const auto& dv = divisor.coefficients();
    std::vector<mpz_class> quot(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        const mpz_class factor = rem[i];
        if (factor == 0)
            continue;
        quot[i - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[i - dd + j].get_mpz_t(), factor.get_mpz_t(), dv[j].get_mpz_t());
    }
    rem.resize(dd);
    return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

IntegerPolynomial exact_quotient(const IntegerPolynomial& dividend, const IntegerPolynomial& divisor)
{
    auto [quotient, remainder] = divide_monic(dividend, divisor);
    if (!remainder.is_zero())
        throw VerificationFailure("inexact division of " + dividend.to_string() + " by " +
                                  divisor.to_string());
    return quotient;
}

IntegerPolynomial pow(const IntegerPolynomial& base, std::uint64_t exponent)
{
    IntegerPolynomial result{1};
    IntegerPolynomial square = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= square;
        exponent >>= 1;
        if (exponent > 0)
            square *= square;
    }
    return result;
}

// ---------------------------------------------------------------------------
// ModularPolynomial

ModularPolynomial::ModularPolynomial(PrimeModulus p, std::vector<std::uint64_t> coefficients)
    : p_(p), coeffs_(std::move(coefficients))
{
    for (auto& c : coeffs_)
        c %= p_.value();
    normalize();
}

void ModularPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::uint64_t ModularPolynomial::evaluate(std::uint64_t x) const
{
    const std::uint64_t p = p_.value();
    x %= p;
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = (acc * x + coeffs_[i]) % p;
    return acc;
}

ModularPolynomial ModularPolynomial::divide_linear(std::uint64_t root, std::uint64_t& remainder) const
{
    const std::uint64_t p = p_.value();
    root %= p;
    if (coeffs_.empty()) {
        remainder = 0;
        return *this;
    }
    std::vector<std::uint64_t> quot(coeffs_.size() - 1);
    std::uint64_t carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        carry = (carry * root + coeffs_[i]) % p;
        if (i > 0)
            quot[i - 1] = carry;
    }
    remainder = carry;
    return ModularPolynomial(p_, std::move(quot));
}

ModularPolynomial operator*(const ModularPolynomial& a, const ModularPolynomial& b)
{
    if (a.p_ != b.p_)
        throw DomainError("modulus mismatch in polynomial product");
    if (a.is_zero() || b.is_zero())
        return ModularPolynomial(a.p_);
    const std::uint64_t p = a.p_.value();
    std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = (out[i + j] + a.coeffs_[i] * b.coeffs_[j]) % p;
    return ModularPolynomial(a.p_, std::move(out));
}

ModularPolynomial pow(const ModularPolynomial& base, std::uint64_t exponent)
{
    ModularPolynomial result(base.modulus(), {1});
    ModularPolynomial square = base;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

std::string ModularPolynomial::to_string() const
{
    return format_terms(
        coeffs_, [](std::uint64_t) { return false; },
        [](std::uint64_t c) { return std::to_string(c); });
}

ModularPolynomial reduce_mod(const IntegerPolynomial& poly, const PrimeModulus& p)
{
    const mpz_class modulus(static_cast<unsigned long>(p.value()));
    std::vector<std::uint64_t> out;
    out.reserve(poly.coefficients().size());
    mpz_class r;
    for (const auto& c : poly.coefficients()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        out.push_back(r.get_ui());
    }
    return ModularPolynomial(p, std::move(out));
}

} // namespace cremona
