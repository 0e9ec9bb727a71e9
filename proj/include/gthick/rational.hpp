#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gthick {

// All coordinates are exact rationals; nothing in the geometry layer ever
// rounds. cpp_rational keeps gcd-reduced form with positive denominator,
// which is exactly the canonical representation we need.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// Serialized form is "p/q", with "/q" omitted when q == 1.
std::string rational_to_string(const Rational& r);

// Parses "p", "-p", "p/q". Throws MalformedInputError on anything else
// (line number reported as 0 when parsing detached tokens).
Rational parse_rational(const std::string& text, int line = 0);

// r with r*r <= v (resp. >= v), within 2^-48 of the true root.
Rational sqrt_lower(const Rational& v);
Rational sqrt_upper(const Rational& v);

// Largest power of two t with t*t < bound_sq (bound_sq > 0). Keeps step
// sizes bit-cheap where sqrt precision is unnecessary.
Rational pow2_step_below(const Rational& bound_sq);

// Nearest rational to x with denominator growth controlled by continued
// fractions; stops once |value - x| <= tolerance.
Rational rationalize(double x, const Rational& tolerance);

}  // namespace gthick
