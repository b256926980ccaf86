#include "basel/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace basel {
namespace {

long digit_count(long n) {
    long d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d;
}

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Largest D >= 0 with err < 10^-D, capped at `max_digits`.
long digits_from_error(const Rational& err, long max_digits) {
    if (err <= 0) return max_digits;
    long d = 0;
    while (d < max_digits && err < rat_make(1, pow10(d + 1))) ++d;
    if (err >= rat_make(1, pow10(d))) return std::max(0L, d - 1);
    return d;
}

/// Central binomial walker: advance C(2n,n) -> C(2n+2,n+1).
Integer next_central(const Integer& c, long n) { return c * (2 * (2 * n + 1)) / (n + 1); }

std::string rational_ceil_text(const Rational& r, long scale) {
    Integer m = ceil_div(r.get_num() * pow10(scale), r.get_den());
    return fxp_to_string(m, scale);
}

}  // namespace

const char* series_name(SeriesId id) {
    return id == SeriesId::basel ? "basel" : "stirling";
}

SeriesId series_from_name(const std::string& name) {
    if (name == "basel") return SeriesId::basel;
    if (name == "stirling") return SeriesId::stirling;
    throw std::domain_error("unknown series: " + name);
}

Rational term(SeriesId series, long n) {
    if (n < 1) throw std::domain_error("term: index must be >= 1");
    if (series == SeriesId::basel) return rat_make(1, Integer(n) * n);
    return rat_make(3, Integer(n) * n * binom(2 * n, n));
}

Rational tail_bound(SeriesId series, long N) {
    if (N < 1) throw std::domain_error("tail_bound: index must be >= 1");
    if (series == SeriesId::basel) return rat_make(1, N);
    return rat_make(4, 3) * term(SeriesId::stirling, N + 1);
}

Rational partial_sum_exact(SeriesId series, long N, long cap) {
    if (N < 1) throw std::domain_error("partial_sum_exact: index must be >= 1");
    if (N > cap)
        throw std::domain_error(
            "partial_sum_exact: term count exceeds the exact-backend cap; "
            "use the fixed-point backend (partial_sum_fixed)");
    Rational sum = 0;
    if (series == SeriesId::basel) {
        for (long n = 1; n <= N; ++n) sum += rat_make(1, Integer(n) * n);
    } else {
        Integer c = 2;  // C(2n,n) at n = 1
        for (long n = 1; n <= N; ++n) {
            sum += rat_make(3, Integer(n) * n * c);
            c = next_central(c, n);
        }
    }
    return sum;
}

FixedPointDecimal partial_sum_fixed_serial(SeriesId series, long N, long scale) {
    if (N < 1 || scale < 1) throw std::domain_error("partial_sum_fixed: need N >= 1, scale >= 1");
    Integer p = pow10(scale);
    Integer sum = 0;
    if (series == SeriesId::basel) {
        for (long n = 1; n <= N; ++n) sum += p / (Integer(n) * n);
    } else {
        Integer c = 2;
        for (long n = 1; n <= N; ++n) {
            sum += (3 * p) / (Integer(n) * n * c);
            c = next_central(c, n);
        }
    }
    return FixedPointDecimal{sum, scale, N};
}

FixedPointDecimal basel_sum_fixed_parallel(long N, long scale) {
    if (N < 1 || scale < 1) throw std::domain_error("partial_sum_fixed: need N >= 1, scale >= 1");
    Integer p = pow10(scale);
    Integer total = 0;
#pragma omp parallel
    {
        Integer local = 0;
#pragma omp for schedule(static) nowait
        for (long n = 1; n <= N; ++n) local += p / (Integer(n) * n);
#pragma omp critical
        total += local;
    }
    return FixedPointDecimal{total, scale, N};
}

FixedPointDecimal partial_sum_fixed(SeriesId series, long N, long scale) {
    if (series == SeriesId::basel && N >= 4096) return basel_sum_fixed_parallel(N, scale);
    return partial_sum_fixed_serial(series, N, scale);
}

long terms_for_digits(SeriesId series, long D) {
    if (D < 1) throw std::domain_error("terms_for_digits: need D >= 1");
    if (series == SeriesId::basel) {
        // 1/N < 10^-D forces N > 10^D.
        Integer n = pow10(D) + 1;
        if (n > std::numeric_limits<long>::max())
            throw std::overflow_error("terms_for_digits: basel term count overflows");
        return n.get_si();
    }
    // tail_bound(N) = 4/[(N+1)^2 C(2N+2,N+1)] < 10^-D
    Integer threshold = 4 * pow10(D);
    Integer c = 6;  // C(2m,m) at m = 2
    for (long N = 1;; ++N) {
        long m = N + 1;
        if (Integer(m) * m * c > threshold) return N;
        c = next_central(c, m);
    }
}

Rational EvalResult::lower() const { return value.lower(); }

Rational EvalResult::upper() const { return value.upper() + tail_bound; }

std::string EvalResult::certified_text(long digits) const {
    Integer lo = floor_div(lower().get_num() * pow10(digits), lower().get_den());
    Integer hi = floor_div(upper().get_num() * pow10(digits), upper().get_den());
    if (lo != hi)
        throw std::logic_error("certified_text: interval straddles a digit boundary");
    return fxp_to_string(lo, digits);
}

BudgetExceeded::BudgetExceeded(long required_, long budget_)
    : std::runtime_error("required term count " + std::to_string(required_) +
                         " exceeds budget " + std::to_string(budget_)),
      required(required_),
      budget(budget_) {}

namespace {

bool truncations_agree(const EvalResult& r, long D) {
    Rational lo = r.lower(), hi = r.upper();
    Integer p = pow10(D);
    return floor_div(lo.get_num() * p, lo.get_den()) == floor_div(hi.get_num() * p, hi.get_den());
}

EvalResult certify(SeriesId series, long N, long scale, long D) {
    EvalResult out;
    out.series = series;
    out.terms_used = N;
    out.value = partial_sum_fixed(series, N, scale);
    out.tail_bound = basel::tail_bound(series, N);
    Rational total_err = rat_make(2 * N, pow10(scale)) + out.tail_bound;
    out.certified_digits = digits_from_error(total_err, scale);
    if (out.certified_digits < D || !truncations_agree(out, D)) out.terms_used = -1;  // retry flag
    return out;
}

}  // namespace

EvalResult eval_constant(long D) {
    if (D < 1) throw std::domain_error("eval_constant: need D >= 1");
    for (long guard = 2;; guard += 5) {
        long N = terms_for_digits(SeriesId::stirling, D + guard);
        long scale = D + digit_count(N) + 3 + guard;
        EvalResult r = certify(SeriesId::stirling, N, scale, D);
        if (r.terms_used > 0) return r;
    }
}

EvalResult eval_constant_basel(long D, long term_budget) {
    if (D < 1) throw std::domain_error("eval_constant_basel: need D >= 1");
    for (long guard = 1;; ++guard) {
        long N;
        try {
            N = terms_for_digits(SeriesId::basel, D + guard);
        } catch (const std::overflow_error&) {
            throw BudgetExceeded(std::numeric_limits<long>::max(), term_budget);
        }
        if (N > term_budget) throw BudgetExceeded(N, term_budget);
        long scale = D + digit_count(N) + 3 + guard;
        EvalResult r = certify(SeriesId::basel, N, scale, D);
        if (r.terms_used > 0) return r;
    }
}

EvalResult eval_pi(long D) {
    if (D < 1) throw std::domain_error("eval_pi: need D >= 1");
    for (long t = D + 8;; t += 10) {
        EvalResult l = eval_constant(t);
        Rational a_lo = 6 * l.lower();
        Rational a_hi = 6 * l.upper();
        Integer p2 = pow10(2 * t);
        Integer root_lo = isqrt(floor_div(a_lo.get_num() * p2, a_lo.get_den()));
        Integer root_hi = isqrt(ceil_div(a_hi.get_num() * p2, a_hi.get_den())) + 1;

        EvalResult out;
        out.series = l.series;
        out.terms_used = l.terms_used;
        out.value = FixedPointDecimal{root_lo, t, root_hi - root_lo};
        out.tail_bound = 0;
        Rational width = rat_make(2 * (root_hi - root_lo), pow10(t));
        out.certified_digits = digits_from_error(width, t);
        if (out.certified_digits >= D && truncations_agree(out, D)) return out;
    }
}

ConvergenceReport convergence_report(long D_max, std::vector<long> samples, long term_budget) {
    if (D_max < 1) throw std::domain_error("convergence_report: need D_max >= 1");
    if (samples.empty()) samples = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1000};
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    ConvergenceReport report;
    report.series = {"basel", "stirling"};
    long scale = D_max + 4;
    for (SeriesId id : {SeriesId::basel, SeriesId::stirling}) {
        for (long n : samples) {
            if (n < 1) throw std::domain_error("convergence_report: sample N must be >= 1");
            ReportRow row;
            row.n = n;
            row.series = id;
            FixedPointDecimal sum = partial_sum_fixed(id, n, scale);
            row.sum = fxp_to_string(sum);
            Rational tail = tail_bound(id, n);
            row.tail_bound = rational_ceil_text(tail, scale);
            Rational total_err = rat_make(2 * n, pow10(scale)) + tail;
            row.certified_digits = digits_from_error(total_err, scale);
            report.rows.push_back(std::move(row));
        }
    }
    for (long d = 1; d <= D_max; ++d) {
        for (SeriesId id : {SeriesId::basel, SeriesId::stirling}) {
            SummaryEntry e;
            e.digits = d;
            e.series = id;
            try {
                e.terms = terms_for_digits(id, d);
                e.feasible = e.terms <= term_budget;
            } catch (const std::overflow_error&) {
                e.terms = -1;
                e.feasible = false;
            }
            report.summary.push_back(e);
        }
    }
    return report;
}

std::string report_to_json(const ConvergenceReport& r) {
    nlohmann::json j;
    j["series"] = r.series;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"n", row.n},
                             {"series", series_name(row.series)},
                             {"sum", row.sum},
                             {"tail_bound", row.tail_bound},
                             {"certified_digits", row.certified_digits}});
    }
    j["summary"] = nlohmann::json::array();
    for (const auto& e : r.summary) {
        j["summary"].push_back({{"digits", e.digits},
                                {"series", series_name(e.series)},
                                {"terms", e.terms},
                                {"feasible", e.feasible}});
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ConvergenceReport& r) {
    std::ostringstream out;
    out << "n,series,sum,tail_bound,certified_digits\n";
    for (const auto& row : r.rows)
        out << row.n << ',' << series_name(row.series) << ',' << row.sum << ','
            << row.tail_bound << ',' << row.certified_digits << '\n';
    out << "\nseries,digits,terms,feasible\n";
    for (const auto& e : r.summary)
        out << series_name(e.series) << ',' << e.digits << ',' << e.terms << ','
            << (e.feasible ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace basel
