#include "cremona/cremona_table.hpp"

#include "cremona/errors.hpp"

namespace cremona {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_divides(const PrimeModulus& p, std::uint64_t t)
{
    if (t == 0 || (p.value() - 1) % t != 0)
        throw DomainError("t = " + std::to_string(t) + " does not divide p - 1 = " +
                          std::to_string(p.value() - 1) + "; no perfect field realizes this pair");
}

std::uint64_t table_value(std::uint64_t p, std::uint64_t t)
{
    if (p == 2)
        return 4;
    if (p == 3 && t == 1)
        return 3;
    if (t == 1 || t == 2)
        return 2;
    if (t == 3 || t == 4 || t == 6)
        return 1;
    return 0;
}

} // namespace

void validate(const FieldDescriptor& k)
{
    std::visit(overloaded{
                   [](const FiniteField& f) { as_prime_power(f.q); },
                   [](const CyclotomicExtension& c) {
                       if (c.m == 0)
                           throw DomainError("cyclotomic extension index must be at least 1");
                   },
                   [](const auto&) {},
               },
               k);
}

std::string describe(const FieldDescriptor& k)
{
    return std::visit(overloaded{
                          [](const FiniteField& f) { return "F_" + std::to_string(f.q); },
                          [](const Rationals&) { return std::string("Q"); },
                          [](const CyclotomicExtension& c) { return "Q(zeta_" + std::to_string(c.m) + ")"; },
                          [](const AlgebraicallyClosed&) { return std::string("algebraically closed"); },
                      },
                      k);
}

std::uint64_t t_for_field(const FieldDescriptor& k, const PrimeModulus& p)
{
    validate(k);
    const std::uint64_t pv = p.value();
    return std::visit(overloaded{
                          [&](const FiniteField& f) -> std::uint64_t {
                              if (f.q % pv == 0)
                                  throw DomainError("p = " + std::to_string(pv) +
                                                    " is the characteristic of F_" + std::to_string(f.q));
                              return multiplicative_order(static_cast<std::int64_t>(f.q % pv), p);
                          },
                          [&](const Rationals&) -> std::uint64_t { return pv - 1; },
                          [&](const CyclotomicExtension& c) -> std::uint64_t {
                              return euler_phi(lcm(c.m, pv)) / euler_phi(c.m);
                          },
                          [](const AlgebraicallyClosed&) -> std::uint64_t { return 1; },
                      },
                      k);
}

AttainingExample attaining_example(const PrimeModulus& p, std::uint64_t t)
{
    require_divides(p, t);
    const std::uint64_t pv = p.value();
    if (pv == 2)
        return {4, kAttainP2};
    if (pv == 3 && t == 1)
        return {3, kAttainFermat};
    if (t <= 2)
        return {2, kAttainTorus2};
    if (t == 3 || t == 4 || t == 6)
        return {1, kAttainTorus1};
    return {0, kAttainNone};
}

CremonaBound cremona_rank_bound(const PrimeModulus& p, std::uint64_t t)
{
    require_divides(p, t);
    const AttainingExample example = attaining_example(p, t);
    return {p.value(), t, table_value(p.value(), t), example.construction};
}

} // namespace cremona
