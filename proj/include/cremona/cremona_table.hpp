#pragma once

// Upper bound on the rank of a p-elementary subgroup of the plane Cremona
// group over a perfect field k, as a function of p and t = [k(zeta_p) : k]:
//
//     4  if p = 2
//     3  if p = 3, t = 1
//     2  if p = 3, t = 2, or p > 3, t in {1, 2}
//     1  if t in {3, 4, 6}
//     0  otherwise
//
// Every bound is attained; the attaining constructions are carried as fixed
// descriptive strings only.

#include "cremona/number_theory.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace cremona {

struct FiniteField {
    std::uint64_t q;
};
struct Rationals {};
/// Q(zeta_m)
struct CyclotomicExtension {
    std::uint64_t m;
};
struct AlgebraicallyClosed {};

using FieldDescriptor = std::variant<FiniteField, Rationals, CyclotomicExtension, AlgebraicallyClosed>;

/// Throws DomainError for an invalid descriptor (q not a prime power, m = 0).
void validate(const FieldDescriptor& k);
std::string describe(const FieldDescriptor& k);

/// [k(zeta_p) : k]. Throws DomainError when p is the characteristic of k.
std::uint64_t t_for_field(const FieldDescriptor& k, const PrimeModulus& p);

inline constexpr const char* kAttainP2 = "(Z/2)⁴ on P¹×P¹";
inline constexpr const char* kAttainFermat = "Fermat cubic surface, rank 3";
inline constexpr const char* kAttainTorus2 = "2-dimensional torus, rank 2";
inline constexpr const char* kAttainTorus1 = "rank-1 torus witness, t ∈ {3,4,6}";
inline constexpr const char* kAttainNone = "none";

struct AttainingExample {
    std::uint64_t rank;
    std::string construction;
};

struct CremonaBound {
    std::uint64_t p;
    std::uint64_t t;
    std::uint64_t rank_bound;
    std::string attained_by;
};

/// Throws DomainError unless t divides p - 1.
CremonaBound cremona_rank_bound(const PrimeModulus& p, std::uint64_t t);

/// Throws DomainError unless t divides p - 1.
AttainingExample attaining_example(const PrimeModulus& p, std::uint64_t t);

} // namespace cremona
