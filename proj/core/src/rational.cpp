#include "gonil/rational.hpp"

#include <cctype>

namespace gonil {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw parse_error("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(Integer(std::string(num)));

    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den))
        throw parse_error("malformed rational: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
    // Dividing two canonical rationals canonicalizes; constructing mpq from
    // the raw string would not.
    return Rational(Integer(std::string(num))) / Rational(d);
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace gonil
