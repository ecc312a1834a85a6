#include "sumcomm/rational.hpp"

#include <charconv>

namespace sumcomm {

namespace {

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad rational component '" + s + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (text.find('.') != std::string::npos)
        throw ParseError("decimals are rejected; write a rational as a/b");
    if (slash == std::string::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
}

}  // namespace sumcomm
