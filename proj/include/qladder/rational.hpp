#ifndef QLADDER_RATIONAL_HPP
#define QLADDER_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace qladder {

/// Arbitrary-precision rational scalar. GMP keeps it in canonical reduced
/// form (coprime numerator/denominator, positive denominator) at all times,
/// so equality is plain comparison and no rounding ever occurs.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// r^k for any integer k (negative allowed; r must be nonzero then).
inline Rational pow_int(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (k < 0) {
        if (r == 0) throw std::domain_error("pow_int: zero base, negative exponent");
        return pow_int(Rational(1) / r, -k);
    }
    Integer num = boost::multiprecision::pow(numerator(r), static_cast<unsigned>(k));
    Integer den = boost::multiprecision::pow(denominator(r), static_cast<unsigned>(k));
    return Rational(num, den);
}

/// Parses "p/r" or "p" with optional sign. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qladder

#endif
