#pragma once

#include <vector>

#include "basel/exact.hpp"

namespace basel {

// Coefficient families of the arcsin expansion and of its square.
// u_n is indexed from 0, v_n from 1. The closed form for v is usually
// written for v_{n+1} with n >= 0; here everything is re-indexed to
// v_n = 2^(2n-1) ((n-1)!)^2 / (2n)! so the three routes share one index.

enum class CoeffKind { u, v };

// Batch of coefficients; entry j holds the value at index start_index + j
// (u is indexed from 0, v from 1). All entries are strictly positive.
struct CoeffTable {
    CoeffKind kind = CoeffKind::u;
    std::vector<Rational> values;
    long start_index = 0;
};

/// First `count` coefficients of the requested family.
CoeffTable coeff_table(CoeffKind kind, long count);

/// u_n = 2^(-2n)/(2n+1) * C(2n,n), n >= 0.
Rational u_coeff(long n);

/// v_n by the Cauchy convolution v_n = sum_{i=0}^{n-1} u_i u_{n-1-i}, n >= 1.
Rational v_via_cauchy(long n);

/// v_n by the recurrence v_1 = 1, (2n+2)(2n+1) v_{n+1} = 4n^2 v_n, n >= 1.
/// Prefix values are memoized (thread-safe).
Rational v_via_recurrence(long n);

/// w_i = 4i^2 / ((2i+2)(2i+1)), i >= 1; the recurrence ratio v_{i+1}/v_i.
Rational w_factor(long i);

/// v_n by the closed form 2^(2n-1) ((n-1)!)^2 / (2n)!, n >= 1.
Rational v_closed_form(long n);

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// Exact check of
///   (n+1)(2n+1) C(2n,n) * sum_{i=0}^{n} C(2i,i) C(2n-2i,n-i) /
///       [(2i+1)(2n-2i+1)]  ==  2^(4n)
/// for n >= 0. Both sides are returned for diagnostics.
IdentityCheck verify_identity(long n);

}  // namespace basel
