#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binframe {

// Precondition violations. Negative mathematical outcomes (not invertible,
// not spanning, not equivalent) are never reported through this type.
enum class ErrorKind {
    DimensionMismatch,
    ShapeMismatch,
    SizeMismatch,
    OutOfRange,
    NotSquare,
    NotSymmetric,
    NotParseval,
    RepeatsPresent,
    DimensionTooSmall,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace binframe
