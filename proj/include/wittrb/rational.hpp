#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wittrb {

// Exact arithmetic-precision rationals, always kept in canonical form
// (reduced, positive denominator). cpp_rational maintains the invariant
// through every arithmetic operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Sign-safe construction: cpp_rational's (num, den) constructor rejects
// negative denominators, so route through exact division.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// Canonical text form "p/q", with "/q" omitted when q == 1.
inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accepts "p" or "p/q" with optional sign on either part; the result is
// canonicalized, so "4/-6" parses as "-2/3".
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') throw bad();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt num = parse_int(text.substr(0, slash));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rational(num, den);
}

} // namespace wittrb
