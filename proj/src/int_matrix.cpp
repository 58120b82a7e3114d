#include "cremona/int_matrix.hpp"

#include "cremona/errors.hpp"

#include <sstream>

namespace cremona {

IntegerMatrix::IntegerMatrix(std::size_t dimension) : dim_(dimension), entries_(dimension * dimension)
{
    if (dimension == 0)
        throw DomainError("matrix dimension must be at least 1");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_)
            throw DomainError("matrix rows must form a square array");
        std::size_t j = 0;
        for (long v : row)
            (*this)(i, j++) = v;
        ++i;
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    if (rows.empty())
        throw DomainError("matrix must have at least one row");
    IntegerMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DomainError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t dimension)
{
    IntegerMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::companion(const IntegerPolynomial& monic)
{
    if (!monic.is_monic() || monic.degree() < 1)
        throw DomainError("companion matrix needs a monic polynomial of positive degree");
    const auto d = static_cast<std::size_t>(monic.degree());
    IntegerMatrix m(d);
    for (std::size_t i = 1; i < d; ++i)
        m(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i)
        m(i, d - 1) = -monic.coefficient(i);
    return m;
}

IntegerMatrix IntegerMatrix::block_diagonal(const std::vector<IntegerMatrix>& blocks)
{
    std::size_t total = 0;
    for (const auto& b : blocks)
        total += b.dimension();
    IntegerMatrix m(total);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dimension(); ++i)
            for (std::size_t j = 0; j < b.dimension(); ++j)
                m(offset + i, offset + j) = b(i, j);
        offset += b.dimension();
    }
    return m;
}

bool IntegerMatrix::is_identity() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix& IntegerMatrix::operator+=(const IntegerMatrix& other)
{
    if (dim_ != other.dim_)
        throw DomainError("matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += other.entries_[k];
    return *this;
}

IntegerMatrix& IntegerMatrix::operator-=(const IntegerMatrix& other)
{
    if (dim_ != other.dim_)
        throw DomainError("matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= other.entries_[k];
    return *this;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.dim_ != b.dim_)
        throw DomainError("matrix dimension mismatch");
    const std::size_t d = a.dim_;
    IntegerMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return out;
}

IntegerMatrix operator*(const mpz_class& scalar, IntegerMatrix m)
{
    for (auto& e : m.entries_)
        e *= scalar;
    return m;
}

IntegerMatrix operator-(IntegerMatrix m)
{
    for (auto& e : m.entries_)
        e = -e;
    return m;
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < dim_; ++j)
            out << (j ? ", " : "") << (*this)(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

IntegerMatrix pow(const IntegerMatrix& base, std::uint64_t exponent)
{
    IntegerMatrix result = IntegerMatrix::identity(base.dimension());
    IntegerMatrix square = base;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

} // namespace cremona
