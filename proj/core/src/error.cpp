#include "motzkin/error.hpp"

namespace motzkin {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonUnit: return "NonUnit";
        case ErrorCode::BadConstantTerm: return "BadConstantTerm";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::IntegralityViolation: return "IntegralityViolation";
        case ErrorCode::SingularPivot: return "SingularPivot";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::NoClosedForm: return "NoClosedForm";
        case ErrorCode::NetworkUnavailable: return "NetworkUnavailable";
        case ErrorCode::MalformedBFile: return "MalformedBFile";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CatalogFormat: return "CatalogFormat";
    }
    return "Unknown";
}

}  // namespace motzkin
