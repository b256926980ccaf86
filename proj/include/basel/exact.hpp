#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace basel {

// Arbitrary-precision signed integer and normalized rational.
// GMP keeps both canonical: no negative zero, gcd-reduced, denominator > 0.
using Integer = mpz_class;
using Rational = mpq_class;

/// p/q as a normalized rational. Throws std::domain_error if q == 0.
Rational rat_make(const Integer& p, const Integer& q);

/// n! for n >= 0.
Integer factorial(const Integer& n);

/// C(n,k) by the multiplicative running product (exact division each step).
/// Requires 0 <= k <= n.
Integer binom(const Integer& n, const Integer& k);

/// Floor square root: the unique s with s^2 <= x < (s+1)^2. Newton iteration.
Integer isqrt(const Integer& x);

/// 10^e for e >= 0.
Integer pow10(long e);

// Scaled-integer decimal with a sound ulp error bound. Represents the
// interval [mantissa - error_ulps, mantissa + error_ulps] * 10^-scale.
struct FixedPointDecimal {
    Integer mantissa;
    long scale = 0;       // decimal fractional digits, >= 0
    Integer error_ulps;   // >= 0

    Rational lower() const;
    Rational upper() const;
};

/// Floor r to `scale` fractional digits with a 1-ulp error credit.
/// The resulting interval always contains r.
FixedPointDecimal fxp_from_rational(const Rational& r, long scale);

/// Fixed-point text "<sign><int part>.<scale fractional digits>".
/// No exponent notation; trailing zeros kept. scale 0 prints no point.
std::string fxp_to_string(const FixedPointDecimal& d);
std::string fxp_to_string(const Integer& mantissa, long scale);

}  // namespace basel
