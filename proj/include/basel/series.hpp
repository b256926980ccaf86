#pragma once

#include <vector>

#include "basel/exact.hpp"

namespace basel {

// Formal truncated power series over exact rationals. coefficient(k) is the
// coefficient of x^k for 0 <= k <= order(); nothing is assumed about higher
// degrees. Arithmetic tracks the highest degree at which its output is
// complete and refuses to report beyond it.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    static TruncatedSeries zero(long order);
    static TruncatedSeries constant(const Rational& c, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coefficient(long k) const;
    Rational& coefficient(long k);
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Index of the first nonzero stored coefficient; order()+1 if all zero.
    long valuation() const;

    bool is_zero() const { return valuation() > order(); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Termwise sum, complete through min(a.order, b.order).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at `order`. Coefficient k of the product is
/// complete iff k <= min(a.order + b.valuation, b.order + a.valuation);
/// requesting an order beyond that bound throws std::domain_error.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, long order);

/// Largest order at which multiply(a, b, .) is exact.
long multiply_complete_order(const TruncatedSeries& a, const TruncatedSeries& b);

/// Termwise antiderivative with zero constant term; output order = input + 1.
TruncatedSeries integrate(const TruncatedSeries& s);

/// Termwise derivative; output order = input - 1 (order-0 input gives [0]).
TruncatedSeries differentiate(const TruncatedSeries& s);

/// Expansion of (1 - x^2)^(-1/2): coefficient of x^(2n) is 4^(-n) C(2n,n),
/// odd positions zero.
TruncatedSeries inv_sqrt_one_minus_x2(long order);

/// arcsin x = integrate(inv_sqrt_one_minus_x2(order-1)); odd position 2n+1
/// holds u_n. order >= 1.
TruncatedSeries arcsin_series(long order);

/// (arcsin x)^2; position 2n holds v_n for n >= 1. order >= 2.
TruncatedSeries f_series(long order);

/// Residual of the defining ODE: (1 - x^2) f'' - x f' - 2, complete through
/// degree f.order - 2. Identically zero when f is a truncation of (arcsin)^2.
TruncatedSeries ode_residual(const TruncatedSeries& f);

}  // namespace basel
