#include "basel/coefficients.hpp"

#include <mutex>
#include <vector>

namespace basel {

CoeffTable coeff_table(CoeffKind kind, long count) {
    if (count < 0) throw std::domain_error("coeff_table: negative count");
    CoeffTable t;
    t.kind = kind;
    t.start_index = kind == CoeffKind::u ? 0 : 1;
    t.values.reserve(static_cast<size_t>(count));
    for (long j = 0; j < count; ++j) {
        long idx = t.start_index + j;
        t.values.push_back(kind == CoeffKind::u ? u_coeff(idx) : v_via_recurrence(idx));
    }
    return t;
}

Rational u_coeff(long n) {
    if (n < 0) throw std::domain_error("u_coeff: negative index");
    Integer den = (Integer(1) << (2 * n)) * (2 * n + 1);
    return rat_make(binom(2 * n, n), den);
}

Rational v_via_cauchy(long n) {
    if (n < 1) throw std::domain_error("v_via_cauchy: index must be >= 1");
    long m = n - 1;  // v_n = sum_{i=0}^{m} u_i u_{m-i}
    Rational sum = 0;
    for (long i = 0; i <= m; ++i) sum += u_coeff(i) * u_coeff(m - i);
    return sum;
}

Rational w_factor(long i) {
    if (i < 1) throw std::domain_error("w_factor: index must be >= 1");
    return rat_make(Integer(4) * i * i, Integer(2 * i + 2) * (2 * i + 1));
}

Rational v_via_recurrence(long n) {
    if (n < 1) throw std::domain_error("v_via_recurrence: index must be >= 1");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(0), Rational(1)};  // cache[k] = v_k
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        long k = static_cast<long>(cache.size()) - 1;
        // (2k+2)(2k+1) v_{k+1} = 4 k^2 v_k
        cache.push_back(cache.back() * rat_make(Integer(4) * k * k,
                                                Integer(2 * k + 2) * (2 * k + 1)));
    }
    return cache[static_cast<size_t>(n)];
}

Rational v_closed_form(long n) {
    if (n < 1) throw std::domain_error("v_closed_form: index must be >= 1");
    Integer num = (Integer(1) << (2 * n - 1)) * factorial(n - 1) * factorial(n - 1);
    return rat_make(num, factorial(2 * n));
}

IdentityCheck verify_identity(long n) {
    if (n < 0) throw std::domain_error("verify_identity: negative index");
    Rational sum = 0;
    for (long i = 0; i <= n; ++i) {
        Integer num = binom(2 * i, i) * binom(2 * (n - i), n - i);
        Integer den = Integer(2 * i + 1) * (2 * (n - i) + 1);
        sum += rat_make(num, den);
    }
    Rational lhs = Rational(Integer(n + 1) * (2 * n + 1) * binom(2 * n, n)) * sum;
    Rational rhs(Integer(1) << (4 * n));
    return IdentityCheck{lhs, rhs, lhs == rhs};
}

}  // namespace basel
