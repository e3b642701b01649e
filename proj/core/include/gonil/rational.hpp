#ifndef GONIL_RATIONAL_HPP
#define GONIL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gonil {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Raised on malformed text input (rationals, graph files, metric files).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses "p/q" or "p" (optional leading '-' or '+'). The result is
/// canonical regardless of the textual form, e.g. "2/4" -> 1/2.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

}  // namespace gonil

#endif
