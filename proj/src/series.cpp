#include "basel/series.hpp"

#include <algorithm>

namespace basel {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(long order) {
    if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
    return TruncatedSeries(std::vector<Rational>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long order) {
    TruncatedSeries s = zero(order);
    s.coefficient(0) = c;
    return s;
}

const Rational& TruncatedSeries::coefficient(long k) const {
    if (k < 0 || k > order()) throw std::domain_error("TruncatedSeries: coefficient out of range");
    return coeffs_[static_cast<size_t>(k)];
}

Rational& TruncatedSeries::coefficient(long k) {
    if (k < 0 || k > order()) throw std::domain_error("TruncatedSeries: coefficient out of range");
    return coeffs_[static_cast<size_t>(k)];
}

long TruncatedSeries::valuation() const {
    long k = 0;
    while (k <= order() && coeffs_[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = std::min(a.order(), b.order());
    TruncatedSeries out = TruncatedSeries::zero(n);
    for (long k = 0; k <= n; ++k) out.coefficient(k) = a.coefficient(k) + b.coefficient(k);
    return out;
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = std::min(a.order(), b.order());
    TruncatedSeries out = TruncatedSeries::zero(n);
    for (long k = 0; k <= n; ++k) out.coefficient(k) = a.coefficient(k) - b.coefficient(k);
    return out;
}

long multiply_complete_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    // Coefficient k is complete as long as every unknown a_i (i > a.order)
    // would be multiplied only by known-zero b coefficients, and vice versa.
    return std::min(a.order() + b.valuation(), b.order() + a.valuation());
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, long order) {
    if (order < 0) throw std::domain_error("multiply: negative order");
    if (order > multiply_complete_order(a, b))
        throw std::domain_error("multiply: requested order exceeds completeness bound");
    TruncatedSeries out = TruncatedSeries::zero(order);
    for (long i = 0; i <= std::min(order, a.order()); ++i) {
        if (a.coefficient(i) == 0) continue;
        for (long j = 0; j <= std::min(order - i, b.order()); ++j)
            out.coefficient(i + j) += a.coefficient(i) * b.coefficient(j);
    }
    return out;
}

TruncatedSeries integrate(const TruncatedSeries& s) {
    TruncatedSeries out = TruncatedSeries::zero(s.order() + 1);
    for (long k = 0; k <= s.order(); ++k)
        out.coefficient(k + 1) = s.coefficient(k) / Rational(k + 1);
    return out;
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
    if (s.order() == 0) return TruncatedSeries::zero(0);
    TruncatedSeries out = TruncatedSeries::zero(s.order() - 1);
    for (long k = 1; k <= s.order(); ++k)
        out.coefficient(k - 1) = s.coefficient(k) * Rational(k);
    return out;
}

TruncatedSeries inv_sqrt_one_minus_x2(long order) {
    if (order < 0) throw std::domain_error("inv_sqrt_one_minus_x2: negative order");
    TruncatedSeries out = TruncatedSeries::zero(order);
    for (long n = 0; 2 * n <= order; ++n)
        out.coefficient(2 * n) = rat_make(binom(2 * n, n), Integer(1) << (2 * n));
    return out;
}

TruncatedSeries arcsin_series(long order) {
    if (order < 1) throw std::domain_error("arcsin_series: order must be >= 1");
    return integrate(inv_sqrt_one_minus_x2(order - 1));
}

TruncatedSeries f_series(long order) {
    if (order < 2) throw std::domain_error("f_series: order must be >= 2");
    // arcsin has valuation 1, so the square of the order-(order-1) truncation
    // is complete through `order`.
    TruncatedSeries g = arcsin_series(order - 1);
    return multiply(g, g, order);
}

TruncatedSeries ode_residual(const TruncatedSeries& f) {
    if (f.order() < 2) throw std::domain_error("ode_residual: need order >= 2");
    long target = f.order() - 2;
    TruncatedSeries f1 = differentiate(f);
    TruncatedSeries f2 = differentiate(f1);

    TruncatedSeries one_minus_x2 = TruncatedSeries::constant(1, std::max(target, 2L));
    one_minus_x2.coefficient(2) = -1;
    TruncatedSeries lhs = multiply(one_minus_x2, f2, target);

    TruncatedSeries x_f1 = TruncatedSeries::zero(target);
    for (long k = 1; k <= target; ++k) x_f1.coefficient(k) = f1.coefficient(k - 1);

    return subtract(subtract(lhs, x_f1), TruncatedSeries::constant(2, target));
}

}  // namespace basel
