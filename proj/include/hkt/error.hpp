#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkt {

enum class ErrorKind {
    DimensionMismatch,
    NotSymmetric,
    Degenerate,
    InvalidTriple,
    InvalidSignature,
    NotUnitImaginary,
    InvariantViolation,
    Unsupported,
    NotPositive,
    IrrationalPoint,
    InvalidBound,
    InvalidConfig,
    EmptyCloud,
    ParseError,
    InternalError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The message names the violated
/// invariant; kind() lets callers branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hkt
