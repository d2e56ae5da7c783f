#include "hkt/error.hpp"

namespace hkt {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::InvalidTriple: return "InvalidTriple";
        case ErrorKind::InvalidSignature: return "InvalidSignature";
        case ErrorKind::NotUnitImaginary: return "NotUnitImaginary";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::IrrationalPoint: return "IrrationalPoint";
        case ErrorKind::InvalidBound: return "InvalidBound";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::EmptyCloud: return "EmptyCloud";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace hkt
