#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Input outside the mathematical domain of an operation (t not dividing p-1,
// p dividing q, n = 0, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A monic integer polynomial that is not a product of cyclotomic polynomials.
class NotCyclotomicProduct : public DomainError {
public:
    explicit NotCyclotomicProduct(const std::string& what) : DomainError(what) {}
};

// An integer matrix with no N >= 1 such that M^N = I.
class NotFiniteOrder : public DomainError {
public:
    explicit NotFiniteOrder(const std::string& what) : DomainError(what) {}
};

// An internal consistency check on a theorem-level statement failed.
class VerificationFailure : public std::logic_error {
public:
    explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

} // namespace cremona
