#pragma once

#include <stdexcept>
#include <string>

namespace finitop {

enum class ErrorCode {
    MissingEmptyOrFull,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
    WidthOverflow,
    WidthMismatch,
    SpaceMismatch,
    UnknownKind,
    UnknownClass,
    UnknownTheoremId,
    SizeUnsupported,
    InvalidArgument,
    Parse,
};

inline const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::WidthOverflow: return "WidthOverflow";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::SizeUnsupported: return "SizeUnsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

/// Domain error raised by every module; `code` identifies the taxonomy entry.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace finitop
