#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wedgeforge {

enum class ErrorCode {
    EmptyVertexSet,
    DuplicateVertexLabel,
    FaceNotInComplex,
    VertexLabelCollision,
    UnknownVertex,
    NotPure,
    TooManyVertices,
    LengthMismatch,
    NotSquare,
    IndexOutOfRange,
    ShapeMismatch,
    InvalidBase,
    TheoremViolation,
    DegreeTooLarge,
    InvalidPresentation,
    ChainComplexInconsistent,
    AmbientTooLarge,
    NotComparable,
    ParseError,
    NonPositiveEntry,
    Overflow,
    GuardExceeded,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::DuplicateVertexLabel: return "DuplicateVertexLabel";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VertexLabelCollision: return "VertexLabelCollision";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::ChainComplexInconsistent: return "ChainComplexInconsistent";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wedgeforge
