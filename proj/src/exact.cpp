#include "basel/exact.hpp"

namespace basel {

Rational rat_make(const Integer& p, const Integer& q) {
    if (q == 0) throw std::domain_error("rat_make: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer factorial(const Integer& n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer acc = 1;
    for (Integer i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Integer binom(const Integer& n, const Integer& k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("binom: need 0 <= k <= n");
    Integer kk = k;
    if (2 * kk > n) kk = n - kk;
    // C(n,i) = C(n,i-1) * (n-i+1) / i, each division exact.
    Integer acc = 1;
    for (Integer i = 1; i <= kk; ++i) {
        acc *= n - i + 1;
        acc /= i;
    }
    return acc;
}

Integer isqrt(const Integer& x) {
    if (x < 0) throw std::domain_error("isqrt: negative argument");
    if (x < 2) return x;
    // Newton on s -> (s + x/s) / 2, started above the root; the iterates
    // decrease monotonically once s >= sqrt(x), so stop at the first rebound.
    Integer s = Integer(1) << (mpz_sizeinbase(x.get_mpz_t(), 2) / 2 + 1);
    for (;;) {
        Integer next = (s + x / s) / 2;
        if (next >= s) break;
        s = next;
    }
    return s;
}

Integer pow10(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

Rational FixedPointDecimal::lower() const {
    return rat_make(mantissa - error_ulps, pow10(scale));
}

Rational FixedPointDecimal::upper() const {
    return rat_make(mantissa + error_ulps, pow10(scale));
}

FixedPointDecimal fxp_from_rational(const Rational& r, long scale) {
    Integer m;
    Integer num = r.get_num() * pow10(scale);
    // floor toward -infinity
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return FixedPointDecimal{m, scale, 1};
}

std::string fxp_to_string(const Integer& mantissa, long scale) {
    Integer a = abs(mantissa);
    std::string digits = a.get_str();
    if (static_cast<long>(digits.size()) <= scale)
        digits.insert(0, static_cast<size_t>(scale) - digits.size() + 1, '0');
    std::string out;
    if (mantissa < 0) out += '-';
    out += digits.substr(0, digits.size() - scale);
    if (scale > 0) {
        out += '.';
        out += digits.substr(digits.size() - scale);
    }
    return out;
}

std::string fxp_to_string(const FixedPointDecimal& d) {
    return fxp_to_string(d.mantissa, d.scale);
}

}  // namespace basel
