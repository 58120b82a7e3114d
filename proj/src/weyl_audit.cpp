#include "cremona/weyl_audit.hpp"

#include "cremona/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

namespace {

// Image of coordinate vector e_i in the quotient basis.
std::array<long, 3> project(int i)
{
    if (i == 3)
        return {-1, -1, -1};
    std::array<long, 3> v{0, 0, 0};
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

Permutation4 compose(const Permutation4& outer, const Permutation4& inner)
{
    Permutation4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

} // namespace

std::string cycle_notation(const Permutation4& perm)
{
    std::string out;
    std::array<bool, 4> seen{};
    for (int start = 0; start < 4; ++start) {
        if (seen[static_cast<std::size_t>(start)] || perm[static_cast<std::size_t>(start)] == start)
            continue;
        out += '(';
        int i = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            out += (first ? "" : " ") + std::to_string(i);
            first = false;
            i = perm[static_cast<std::size_t>(i)];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

IntegerMatrix quotient_action(const Permutation4& perm)
{
    IntegerMatrix m(3);
    for (std::size_t col = 0; col < 3; ++col) {
        const auto image = project(perm[col]);
        for (std::size_t row = 0; row < 3; ++row)
            m(row, col) = image[row];
    }
    return m;
}

bool matches_projection(const Permutation4& perm, const IntegerMatrix& matrix)
{
    for (int i = 0; i < 4; ++i) {
        const auto lhs = project(perm[static_cast<std::size_t>(i)]);
        const auto src = project(i);
        for (std::size_t row = 0; row < 3; ++row) {
            mpz_class rhs = 0;
            for (std::size_t k = 0; k < 3; ++k)
                rhs += matrix(row, k) * src[k];
            if (rhs != lhs[row])
                return false;
        }
    }
    return true;
}

std::vector<WeylElement> enumerate_weyl()
{
    std::vector<WeylElement> out;
    Permutation4 perm{0, 1, 2, 3};
    do {
        out.push_back({perm, quotient_action(perm)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

WeylAuditReport audit_pgl4(const PrimeModulus& p)
{
    WeylAuditReport report;
    report.p = p.value();
    const std::uint64_t minus_one = p.value() - 1;
    const IntegerMatrix minus_identity = -IntegerMatrix::identity(3);
    const IntegerPolynomial minus_one_cubed{1, 3, 3, 1};
    const auto elements = enumerate_weyl();

    if (elements.size() != 24)
        report.failures.push_back("expected 24 Weyl group elements, found " + std::to_string(elements.size()));

    for (const auto& element : elements) {
        const std::string name = cycle_notation(element.permutation);
        const IntegerPolynomial f = char_poly(element.matrix);
        WeylAuditRow row;
        row.cycles = name;
        row.char_poly = f.to_string();
        row.factorization = cyclotomic_factorization(f);
        row.order = matrix_order(element.matrix);
        row.minus_one_multiplicity = root_multiplicity(reduce_mod(f, p), minus_one);

        if (!matches_projection(element.permutation, element.matrix)) {
            report.projection_consistent = false;
            report.failures.push_back(name + ": matrix is not the induced quotient action");
        }
        for (std::uint64_t d : row.factorization.indices) {
            if (d < 1 || d > 4) {
                report.indices_within_1_to_4 = false;
                report.failures.push_back(name + ": cyclotomic index " + std::to_string(d) + " outside {1,2,3,4}");
            }
            if (d != 1 && 2 % d != 0 && 3 % d != 0 && 4 % d != 0) {
                report.indices_divide_invariant_degrees = false;
                report.failures.push_back(name + ": index " + std::to_string(d) +
                                          " divides no invariant degree");
            }
        }
        if (element.matrix == minus_identity) {
            report.contains_minus_identity = true;
            report.failures.push_back(name + ": matrix equals -I");
        }
        if (f == minus_one_cubed) {
            report.contains_minus_one_cubed = true;
            report.failures.push_back(name + ": characteristic polynomial is (X+1)^3");
        }
        report.max_minus_one_multiplicity =
            std::max(report.max_minus_one_multiplicity, row.minus_one_multiplicity);
        report.rows.push_back(std::move(row));
    }

    if (report.max_minus_one_multiplicity > 2)
        report.failures.push_back("multiplicity of -1 mod " + std::to_string(report.p) + " reaches " +
                                  std::to_string(report.max_minus_one_multiplicity));

    for (const auto& a : elements)
        for (const auto& b : elements)
            if (quotient_action(compose(a.permutation, b.permutation)) != a.matrix * b.matrix) {
                report.homomorphism = false;
                report.failures.push_back("homomorphism fails for " + cycle_notation(a.permutation) +
                                          " * " + cycle_notation(b.permutation));
            }
    return report;
}

} // namespace cremona
