#ifndef MOTZKIN_ERROR_HPP
#define MOTZKIN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace motzkin {

// Every failure the library can signal. Callers that need to branch on the
// failure kind inspect MotzkinError::code(); everything else can treat the
// exception as a std::runtime_error.
enum class ErrorCode {
    NonUnit,               // series inverse of a series with zero constant term
    BadConstantTerm,       // series square root of a series whose constant term is not 1
    NotDivisible,          // exact division where the divisor has larger valuation
    IntegralityViolation,  // a counting series produced a non-integer coefficient
    SingularPivot,         // banded solve hit a pivot that cannot be divided out
    TooLong,               // literal enumeration beyond the 3^n guard
    NoClosedForm,          // pair has no catalog entry
    NetworkUnavailable,    // OEIS fetch impossible (offline / transport failure)
    MalformedBFile,        // OEIS b-file could not be parsed
    NotFound,              // OEIS returned 404
    InvalidArgument,       // malformed user input (pattern, identifier, ...)
    CatalogFormat,         // catalog JSON does not follow the schema
};

std::string_view error_code_name(ErrorCode code) noexcept;

class MotzkinError : public std::runtime_error {
public:
    MotzkinError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace motzkin

#endif  // MOTZKIN_ERROR_HPP
