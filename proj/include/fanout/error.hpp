#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanout {

enum class ErrorKind {
    InvalidPrime,
    NotAUnit,
    ZeroInput,
    FactorizationTooHard,
    DivisionByZero,
    ParseError,
    InvalidCouplings,
    NotOddMultiple,
    DimensionMismatch,
    TooLarge,
    BadQubit,
    BadInput,
    IrrationalDistance,
    InvalidConfig,
    InvariantViolation,
    NotAdequate,
    NoColumn,
    Precondition,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidPrime: return "InvalidPrime";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::FactorizationTooHard: return "FactorizationTooHard";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidCouplings: return "InvalidCouplings";
        case ErrorKind::NotOddMultiple: return "NotOddMultiple";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BadQubit: return "BadQubit";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::IrrationalDistance: return "IrrationalDistance";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NotAdequate: return "NotAdequate";
        case ErrorKind::NoColumn: return "NoColumn";
        case ErrorKind::Precondition: return "Precondition";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI) can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fanout
