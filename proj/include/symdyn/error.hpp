#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdyn {

enum class ErrorKind {
    InvalidRun,
    InvalidSymbol,
    AlphabetMismatch,
    InvalidExponent,
    OutOfRange,
    InvalidPattern,
    MaterializationRefused,
    Precondition,
    Inconclusive,
    DomainError,
    PrecisionCap,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) throw Error(kind, what);
}

}  // namespace symdyn
