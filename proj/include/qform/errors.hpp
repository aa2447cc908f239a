#pragma once

/**
 * @file errors.hpp
 * @brief Exception types thrown across the library.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qform {

/// Base of every library error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An error attached to a specific order n.
class IndexedError : public Error {
public:
    IndexedError(const std::string& what, std::size_t n)
        : Error(what + " at n = " + std::to_string(n)), n_(n) {}
    std::size_t index() const noexcept { return n_; }

private:
    std::size_t n_;
};

#define QFORM_SIMPLE_ERROR(Name)            \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    };

#define QFORM_INDEXED_ERROR(Name, Text)                                  \
    class Name : public IndexedError {                                   \
    public:                                                              \
        explicit Name(std::size_t n, const std::string& detail = "")     \
            : IndexedError(detail.empty() ? Text : Text ": " + detail, n) {} \
    };

QFORM_SIMPLE_ERROR(NegativeArgument)
QFORM_SIMPLE_ERROR(ZeroDilation)
QFORM_SIMPLE_ERROR(InvalidQ)
QFORM_SIMPLE_ERROR(NotReducible)
QFORM_SIMPLE_ERROR(ShapeViolation)
QFORM_SIMPLE_ERROR(ZeroDenominator)
QFORM_SIMPLE_ERROR(ConstraintViolation)
QFORM_SIMPLE_ERROR(NotFound)
QFORM_SIMPLE_ERROR(DivergentProduct)
QFORM_SIMPLE_ERROR(ParameterOutOfRange)
QFORM_SIMPLE_ERROR(ParseError)
QFORM_SIMPLE_ERROR(Underdetermined)
QFORM_SIMPLE_ERROR(InternalError)

QFORM_INDEXED_ERROR(NotRegular, "form is not regular")
QFORM_INDEXED_ERROR(ZeroGamma, "vanishing recurrence coefficient")
QFORM_INDEXED_ERROR(AdmissibilityFailure, "leading moment coefficient vanishes")
QFORM_INDEXED_ERROR(OrderLimit, "moment order exceeds the configured limit")
QFORM_INDEXED_ERROR(NonConvergent, "series did not converge")
QFORM_INDEXED_ERROR(QuadratureNonConvergent, "quadrature did not converge")

#undef QFORM_SIMPLE_ERROR
#undef QFORM_INDEXED_ERROR

} // namespace qform
