// basel: certified digits of pi^2/6 and pi from Stirling's accelerated
// series, exact verification of the underlying coefficient identities, and
// convergence reports contrasting the slow and accelerated sums.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "basel/coefficients.hpp"
#include "basel/evaluator.hpp"
#include "basel/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

long term_budget_from_env() {
    const char* env = std::getenv("BASEL_ACCEL_BUDGET");
    if (env == nullptr || *env == '\0') return 10000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1)
        throw CLI::ValidationError("BASEL_ACCEL_BUDGET must be a positive integer");
    return v;
}

int run_digits(const std::string& series, long digits) {
    basel::SeriesId id = basel::series_from_name(series);
    basel::EvalResult r;
    if (id == basel::SeriesId::stirling) {
        r = basel::eval_constant(digits);
    } else {
        try {
            r = basel::eval_constant_basel(digits, term_budget_from_env());
        } catch (const basel::BudgetExceeded& e) {
            std::cerr << "basel: refusing to sum series (I): " << e.what()
                      << " (set BASEL_ACCEL_BUDGET to raise the limit)\n";
            return kExitBudget;
        }
    }
    std::cout << r.certified_text(digits) << "\n";
    std::cout << "# series=" << basel::series_name(r.series) << " terms=" << r.terms_used
              << " tail_bound<=" << basel::fxp_to_string(basel::fxp_from_rational(
                     r.tail_bound, digits + 2).mantissa + 1, digits + 2)
              << " certified_digits=" << r.certified_digits << "\n";
    return kExitOk;
}

int run_pi(long digits) {
    basel::EvalResult r = basel::eval_pi(digits);
    std::cout << r.certified_text(digits) << "\n";
    std::cout << "# series=" << basel::series_name(r.series) << " terms=" << r.terms_used
              << " certified_digits=" << r.certified_digits << "\n";
    return kExitOk;
}

int run_verify(bool coeffs, bool identity, bool ode, long max_n, long order) {
    if (coeffs) {
        for (long n = 1; n <= max_n; ++n) {
            basel::Rational a = basel::v_via_cauchy(n);
            basel::Rational b = basel::v_via_recurrence(n);
            basel::Rational c = basel::v_closed_form(n);
            if (a != b || b != c) {
                std::cout << "coeffs: three-way disagreement at n=" << n << ": cauchy="
                          << a.get_str() << " recurrence=" << b.get_str()
                          << " closed=" << c.get_str() << "\n";
                return kExitVerifyFail;
            }
        }
        std::cout << "coeffs: cauchy = recurrence = closed form for n=1.." << max_n << "\n";
    }
    if (identity) {
        for (long n = 0; n <= max_n; ++n) {
            basel::IdentityCheck chk = basel::verify_identity(n);
            if (!chk.equal) {
                std::cout << "identity: fails at n=" << n << ": lhs=" << chk.lhs.get_str()
                          << " rhs=" << chk.rhs.get_str() << "\n";
                return kExitVerifyFail;
            }
        }
        std::cout << "identity holds for n=0.." << max_n << "\n";
    }
    if (ode) {
        basel::TruncatedSeries res = basel::ode_residual(basel::f_series(order));
        for (long k = 0; k <= res.order(); ++k) {
            if (res.coefficient(k) != 0) {
                std::cout << "ode: nonzero residual " << res.coefficient(k).get_str()
                          << " at degree " << k << "\n";
                return kExitVerifyFail;
            }
        }
        std::cout << "ode: residual zero through degree " << res.order() << "\n";
    }
    return kExitOk;
}

int emit_report(const basel::ConvergenceReport& report, const std::string& format,
                const std::string& output) {
    std::string text =
        format == "json" ? basel::report_to_json(report) : basel::report_to_csv(report);
    if (output.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        std::cerr << "basel: cannot write " << output << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified evaluation of pi^2/6 via Stirling's accelerated series"};
    app.require_subcommand(1);

    std::string series = "stirling";
    long digits = 10;
    auto* cmd_digits = app.add_subcommand(
        "digits",
        "Print certified digits of pi^2/6 (truncated, not rounded; every printed "
        "digit is backed by an exact error interval)");
    cmd_digits->add_option("--series", series, "Series to sum: stirling (accelerated) or basel")
        ->check(CLI::IsMember({"stirling", "basel"}))
        ->capture_default_str();
    cmd_digits->add_option("--digits", digits, "Number of certified fractional digits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    long pi_digits = 10;
    auto* cmd_pi = app.add_subcommand("pi", "Print certified digits of pi (truncated)");
    cmd_pi->add_option("--digits", pi_digits, "Number of certified fractional digits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    bool v_coeffs = false, v_identity = false, v_ode = false;
    long max_n = 100, order = 64;
    auto* cmd_verify =
        app.add_subcommand("verify", "Exact-arithmetic checks of the coefficient derivation");
    cmd_verify->add_flag("--coeffs", v_coeffs, "Three-way agreement of the v coefficients");
    cmd_verify->add_flag("--identity", v_identity, "The closing binomial identity");
    cmd_verify->add_flag("--ode", v_ode, "Zero residual of (1-x^2)f'' = 2 + xf'");
    cmd_verify->add_option("--max-n", max_n, "Largest index checked")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--order", order, "Series truncation order for the ODE check")
        ->check(CLI::Range(2L, 100000L));

    long cmp_digits = 6;
    auto* cmd_compare =
        app.add_subcommand("compare", "Terms needed per digit target for each series");
    cmd_compare->add_option("--digits", cmp_digits, "Largest digit target")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    long rep_digits = 6;
    std::string format = "json", output;
    auto* cmd_report = app.add_subcommand("report", "Full convergence report (rows + summary)");
    cmd_report->add_option("--digits", rep_digits, "Largest digit target in the summary")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_report->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd_report->add_option("--output,-o", output, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_digits->parsed()) return run_digits(series, digits);
        if (cmd_pi->parsed()) return run_pi(pi_digits);
        if (cmd_verify->parsed()) {
            if (!v_coeffs && !v_identity && !v_ode) {
                std::cerr << "basel: verify needs at least one of --coeffs --identity --ode\n";
                return kExitUsage;
            }
            return run_verify(v_coeffs, v_identity, v_ode, max_n, order);
        }
        if (cmd_compare->parsed()) {
            basel::ConvergenceReport report =
                basel::convergence_report(cmp_digits, {1}, term_budget_from_env());
            std::cout << "series,digits,terms\n";
            for (const auto& e : report.summary)
                std::cout << basel::series_name(e.series) << ',' << e.digits << ',' << e.terms
                          << (e.feasible ? "" : " (exceeds term budget)") << "\n";
            return kExitOk;
        }
        if (cmd_report->parsed()) {
            basel::ConvergenceReport report =
                basel::convergence_report(rep_digits, {}, term_budget_from_env());
            return emit_report(report, format, output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "basel: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "basel: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
