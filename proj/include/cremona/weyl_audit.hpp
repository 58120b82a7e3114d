#pragma once

// The Weyl group S_4 of PGL_4 acting on the cocharacter lattice of the
// maximal torus, Z^4 / Z(1,1,1,1), in the basis of the images of e_0, e_1,
// e_2 (so e_3 = -(e_0 + e_1 + e_2)).
//
// Ruling out t = 2 for a rank-3 3-elementary group on a cubic surface needs
// an element whose reduced characteristic polynomial has -1 mod 3 as a root
// of multiplicity 3, forcing F = (X + 1)^3 and the element to be -I. The
// audit enumerates the group and confirms no such element exists.

#include "cremona/int_matrix.hpp"
#include "cremona/intlinalg.hpp"
#include "cremona/number_theory.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cremona {

/// permutation[i] is the image of coordinate i.
using Permutation4 = std::array<int, 4>;

struct WeylElement {
    Permutation4 permutation;
    IntegerMatrix matrix;
};

/// Cycle notation, e.g. "(0 1)(2 3)"; the identity is "()".
std::string cycle_notation(const Permutation4& perm);

/// Induced 3x3 action on Z^4 / Z(1,1,1,1).
IntegerMatrix quotient_action(const Permutation4& perm);

/// Checks proj * P_perm = M * proj, with proj : Z^4 -> Z^3 the quotient map.
bool matches_projection(const Permutation4& perm, const IntegerMatrix& matrix);

/// All 24 elements in lexicographic order of the permutation arrays.
std::vector<WeylElement> enumerate_weyl();

struct WeylAuditRow {
    std::string cycles;
    std::string char_poly;
    CyclotomicFactorization factorization;
    std::uint64_t order;
    std::uint64_t minus_one_multiplicity; // of -1 mod p in F mod p
};

struct WeylAuditReport {
    std::uint64_t p = 3;
    std::vector<WeylAuditRow> rows;
    bool indices_within_1_to_4 = true;
    bool indices_divide_invariant_degrees = true;
    bool contains_minus_identity = false;
    bool contains_minus_one_cubed = false;
    bool homomorphism = true;
    bool projection_consistent = true;
    std::uint64_t max_minus_one_multiplicity = 0;
    std::vector<std::string> failures;

    bool pass() const noexcept { return failures.empty(); }
};

/// Facts checked for all 24 elements: cyclotomic indices lie in {1,2,3,4}
/// and divide an invariant degree of W(A_3) (2, 3, 4) or equal 1; no element
/// is -I; no characteristic polynomial is (X+1)^3; the multiplicity of -1
/// mod p as a root of the reduced characteristic polynomial is at most 2.
/// Also confirms the permutation-to-matrix map is a homomorphism.
WeylAuditReport audit_pgl4(const PrimeModulus& p = PrimeModulus(3));

} // namespace cremona
