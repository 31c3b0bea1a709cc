#include "binframe/error.hpp"

namespace binframe {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension mismatch";
        case ErrorKind::ShapeMismatch: return "shape mismatch";
        case ErrorKind::SizeMismatch: return "size mismatch";
        case ErrorKind::OutOfRange: return "out of range";
        case ErrorKind::NotSquare: return "matrix is not square";
        case ErrorKind::NotSymmetric: return "matrix is not symmetric";
        case ErrorKind::NotParseval: return "not a Parseval frame";
        case ErrorKind::RepeatsPresent: return "repeated vectors present";
        case ErrorKind::DimensionTooSmall: return "dimension too small";
        case ErrorKind::Parse: return "parse error";
    }
    return "unknown error";
}

} // namespace binframe
