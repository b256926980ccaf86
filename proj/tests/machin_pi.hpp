#pragma once

// Test-only independent oracle: pi by Machin's formula
//   pi = 16 atan(1/5) - 4 atan(1/239)
// in exact integer fixed point with its own ulp accounting. Deliberately
// shares nothing with the library's series evaluator beyond the Integer type.

#include "basel/exact.hpp"

namespace oracle {

struct ScaledInterval {
    basel::Integer lo;  // value * 10^scale lies in [lo, hi]
    basel::Integer hi;
    long scale = 0;
};

// atan(1/k) * 10^scale with a sound error bound. Every division floors
// (one ulp each); the alternating tail is bounded by the first omitted term.
inline ScaledInterval atan_inv(long k, long scale) {
    basel::Integer p = basel::pow10(scale);
    basel::Integer x = p / k;
    basel::Integer k2 = basel::Integer(k) * k;
    basel::Integer sum = 0;
    long err = 1;  // from the initial floor of 10^scale / k
    long i = 0;
    while (x != 0) {
        basel::Integer t = x / (2 * i + 1);
        sum += (i % 2 == 0) ? t : -t;
        err += 3;  // floor of x/k^2, floor of the term division, drift slack
        x /= k2;
        ++i;
    }
    err += 8;  // omitted tail once the computed x reaches zero
    return ScaledInterval{sum - err, sum + err, scale};
}

inline ScaledInterval pi(long digits) {
    long scale = digits + 15;
    ScaledInterval a = atan_inv(5, scale);
    ScaledInterval b = atan_inv(239, scale);
    return ScaledInterval{16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo, scale};
}

// pi^2/6 * 10^digits, both endpoints. Endpoints are positive, so squaring
// is monotone; the final divisions are outward-rounded.
inline ScaledInterval pi_squared_over_six(long digits) {
    ScaledInterval p = pi(digits);
    basel::Integer den = 6 * basel::pow10(2 * p.scale - digits);
    basel::Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), basel::Integer(p.lo * p.lo).get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), basel::Integer(p.hi * p.hi).get_mpz_t(), den.get_mpz_t());
    return ScaledInterval{lo, hi, digits};
}

// First `digits` fractional digits, as fixed-point text, when both endpoints
// agree on all of them; throws otherwise (widen the guard and retry).
inline std::string digits_text(const ScaledInterval& v, long digits) {
    basel::Integer p = basel::pow10(v.scale - digits);
    basel::Integer lo = v.lo / p;
    basel::Integer hi = v.hi / p;
    if (lo != hi) throw std::runtime_error("oracle interval straddles a digit boundary");
    return basel::fxp_to_string(lo, digits);
}

inline std::string pi_text(long digits) {
    ScaledInterval v = pi(digits);
    return digits_text(v, digits);
}

inline std::string pi_squared_over_six_text(long digits) {
    return digits_text(pi_squared_over_six(digits + 15), digits);
}

}  // namespace oracle
