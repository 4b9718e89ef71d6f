#include "symdyn/bigint.hpp"

#include "symdyn/error.hpp"

#include <cctype>

namespace symdyn {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidRun: return "InvalidRun";
        case ErrorKind::InvalidSymbol: return "InvalidSymbol";
        case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorKind::InvalidExponent: return "InvalidExponent";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidPattern: return "InvalidPattern";
        case ErrorKind::MaterializationRefused: return "MaterializationRefused";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::PrecisionCap: return "PrecisionCap";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

BigInt parse_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    require(i < text.size(), ErrorKind::Parse, "empty integer literal");
    for (std::size_t j = i; j < text.size(); ++j)
        require(std::isdigit(static_cast<unsigned char>(text[j])) != 0, ErrorKind::Parse,
                "not a decimal integer: '" + std::string(text) + "'");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

std::uint64_t to_u64(const BigInt& v) {
    require(fits_u64(v), ErrorKind::OutOfRange, "value " + to_decimal(v) + " exceeds 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

BigInt pow_u(unsigned long base, unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_decimal(text));
    BigInt num = parse_decimal(text.substr(0, slash));
    BigInt den = parse_decimal(text.substr(slash + 1));
    require(den != 0, ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace symdyn
