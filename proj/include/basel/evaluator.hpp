#pragma once

#include <string>
#include <vector>

#include "basel/exact.hpp"

namespace basel {

// Series (I) is the slow sum 1/n^2; series (II) is Stirling's accelerated
// sum 3/[n^2 C(2n,n)]. Both converge to pi^2/6.
enum class SeriesId { basel, stirling };

const char* series_name(SeriesId id);
SeriesId series_from_name(const std::string& name);

/// Exact n-th term, n >= 1.
Rational term(SeriesId series, long n);

/// Proven upper bound on the omitted tail after N terms:
/// 1/N for basel (integral comparison); (4/3) * term(N+1) for stirling
/// (the term ratio n^2/((2n+1)(2n+2)) never exceeds 1/4).
Rational tail_bound(SeriesId series, long N);

inline constexpr long kExactBackendCap = 10000;

/// Exact rational partial sum, 1 <= N <= cap. Beyond the cap the rational
/// denominators blow up; use the fixed-point backend instead.
Rational partial_sum_exact(SeriesId series, long N, long cap = kExactBackendCap);

/// Fixed-point partial sum: each term floored at `scale` digits, so
/// error_ulps <= N and the interval contains the exact partial sum.
/// Dispatches to the OpenMP kernel for large basel sums.
FixedPointDecimal partial_sum_fixed(SeriesId series, long N, long scale);

/// Serial reference for the parallel kernel; bit-identical output.
FixedPointDecimal partial_sum_fixed_serial(SeriesId series, long N, long scale);

/// OpenMP kernel for the basel series (terms are independent).
FixedPointDecimal basel_sum_fixed_parallel(long N, long scale);

/// Minimal N with tail_bound(series, N) < 10^-D. Analytic (10^D + 1) for
/// basel, incremental search for stirling.
long terms_for_digits(SeriesId series, long D);

struct EvalResult {
    SeriesId series = SeriesId::stirling;
    long terms_used = 0;
    FixedPointDecimal value;   // interval for the partial sum
    Rational tail_bound;       // bound on the omitted tail
    long certified_digits = 0; // largest D with total error < 10^-D

    /// Certified interval for the limit: [value.lower, value.upper + tail].
    Rational lower() const;
    Rational upper() const;

    /// Decimal text truncated at `digits` fractional digits; only emitted
    /// when both interval endpoints agree on every printed digit.
    std::string certified_text(long digits) const;
};

/// Certified pi^2/6 via series (II) with total error < 10^-D.
EvalResult eval_constant(long D);

/// Certified pi^2/6 via series (I) in the fixed-point backend.
/// Throws BudgetExceeded when the required term count exceeds `term_budget`.
EvalResult eval_constant_basel(long D, long term_budget);

struct BudgetExceeded : std::runtime_error {
    long required;
    long budget;
    BudgetExceeded(long required_, long budget_);
};

/// Certified pi = sqrt(6 * pi^2/6) with total error < 10^-D. The interval
/// for 6l is scaled to 10^(2t) and both endpoints pass through isqrt, which
/// brackets the true root without any a priori knowledge of pi.
EvalResult eval_pi(long D);

struct ReportRow {
    long n = 0;
    SeriesId series = SeriesId::basel;
    std::string sum;         // fxp_to_string text
    std::string tail_bound;  // fxp_to_string text (rounded up)
    long certified_digits = 0;
};

struct SummaryEntry {
    long digits = 0;
    SeriesId series = SeriesId::basel;
    long terms = 0;
    bool feasible = true;  // false when terms exceed the summation budget
};

struct ConvergenceReport {
    std::vector<std::string> series;
    std::vector<ReportRow> rows;
    std::vector<SummaryEntry> summary;
};

/// Sampled convergence data for both series plus a terms-per-digit summary
/// for D = 1..D_max. Empty `samples` picks a default ladder.
ConvergenceReport convergence_report(long D_max, std::vector<long> samples = {},
                                     long term_budget = 10000000);

std::string report_to_json(const ConvergenceReport& r);
std::string report_to_csv(const ConvergenceReport& r);

}  // namespace basel
