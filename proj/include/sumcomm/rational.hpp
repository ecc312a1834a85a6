#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sumcomm/errors.hpp"

namespace sumcomm {

/// Exact nonnegative rational. Regime tests and error bounds are compared
/// with cross-multiplication in 128-bit intermediates, never floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0 || num < 0) throw OutOfRange("rational requires num >= 0, den > 0");
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "a/b" (or a bare integer "a"). Decimal notation is rejected.
Rational parse_rational(const std::string& text);

}  // namespace sumcomm
