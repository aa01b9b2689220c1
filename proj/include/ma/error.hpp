#ifndef MA_ERROR_HPP
#define MA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ma {

/// Error categories used across the library. The code string is stable and
/// machine-checkable; the message carries context.
enum class ErrorCode {
    OrderOverflow,
    MissingAssignment,
    ZeroDenominator,
    RetryExhausted,
    InversePresent,
    NotAffineInUtt,
    DeltaZero,
    UnknownName,
    UnsupportedPermutation,
    OutsideSubfamily,
    UnknownSystem,
    ParseError,
    Internal,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::OrderOverflow: return "order-overflow";
    case ErrorCode::MissingAssignment: return "missing-assignment";
    case ErrorCode::ZeroDenominator: return "zero-denominator";
    case ErrorCode::RetryExhausted: return "retry-exhausted";
    case ErrorCode::InversePresent: return "inverse-present";
    case ErrorCode::NotAffineInUtt: return "not-affine-in-u_tt";
    case ErrorCode::DeltaZero: return "delta-zero";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::UnsupportedPermutation: return "unsupported-permutation";
    case ErrorCode::OutsideSubfamily: return "outside-subfamily";
    case ErrorCode::UnknownSystem: return "unknown-system";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code)
    {
    }
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace ma

#endif
