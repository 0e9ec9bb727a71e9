#include "gthick/rational.hpp"

#include <cmath>
#include <limits>

#include "gthick/errors.hpp"

namespace gthick {

std::string rational_to_string(const Rational& r) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text, int line) {
    auto bad = [&](const std::string& why) {
        return MalformedInputError(line, "bad rational '" + text + "': " + why);
    };
    if (text.empty()) throw bad("empty");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        if (slash == 0 || slash + 1 == text.size()) throw bad("misplaced '/'");
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0) throw bad("denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw bad(e.what());
    }
}

namespace {

// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw ParameterOutOfRangeError("sqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

}  // namespace

Rational sqrt_lower(const Rational& v) {
    if (v < 0) throw ParameterOutOfRangeError("sqrt of negative value");
    if (v == 0) return 0;
    // sqrt(a/b) = sqrt(a*b)/b; scale by 2^48 for precision.
    Integer a = numerator(v), b = denominator(v);
    Integer scale = Integer(1) << 48;
    Integer root = isqrt_floor(a * b * scale * scale);
    return Rational(root, b * scale);
}

Rational sqrt_upper(const Rational& v) {
    if (v < 0) throw ParameterOutOfRangeError("sqrt of negative value");
    if (v == 0) return 0;
    Integer a = numerator(v), b = denominator(v);
    Integer scale = Integer(1) << 48;
    Integer root = isqrt_floor(a * b * scale * scale) + 1;
    return Rational(root, b * scale);
}

Rational pow2_step_below(const Rational& bound_sq) {
    if (bound_sq <= 0)
        throw ParameterOutOfRangeError("step bound must be positive");
    // Find j with 4^j < bound_sq via bit lengths, then verify exactly.
    Integer num = numerator(bound_sq), den = denominator(bound_sq);
    long j = (static_cast<long>(boost::multiprecision::msb(num)) -
              static_cast<long>(boost::multiprecision::msb(den))) /
             2;
    auto step_sq = [](long e) {
        return e >= 0 ? Rational(Integer(1) << (2 * e))
                      : Rational(1, Integer(1) << (-2 * e));
    };
    while (step_sq(j) >= bound_sq) --j;
    while (step_sq(j + 1) < bound_sq) ++j;
    return j >= 0 ? Rational(Integer(1) << j)
                  : Rational(1, Integer(1) << -j);
}

namespace {

// Exact rational value of a finite double (mantissa times power of two).
Rational exact_of_double(double x) {
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    long long m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r{Integer(m)};
    if (exp >= 0) {
        r *= Rational{Integer(1) << exp};
    } else {
        r /= Rational{Integer(1) << (-exp)};
    }
    return r;
}

}  // namespace

Rational rationalize(double x, const Rational& tolerance) {
    if (!std::isfinite(x)) throw ModelRejectedError("non-finite model value");
    if (x == 0.0) return 0;
    bool negative = x < 0;
    double ax = negative ? -x : x;
    Rational target = exact_of_double(ax);

    // Continued-fraction convergents p/q of ax.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = ax;
    Rational best = target;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        Integer a(static_cast<long long>(fl));
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        best = Rational(p1, q1);
        Rational diff = best - target;
        if (diff < 0) diff = -diff;
        if (diff <= tolerance) break;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    return negative ? -best : best;
}

}  // namespace gthick
