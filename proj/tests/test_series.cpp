#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "basel/coefficients.hpp"
#include "basel/series.hpp"

using namespace basel;

namespace {

TruncatedSeries make(std::vector<long> nums) {
    std::vector<Rational> c;
    for (long n : nums) c.emplace_back(n);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries random_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c;
    for (long k = 0; k <= order; ++k) c.push_back(rat_make(num(rng), den(rng)));
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("inv_sqrt_one_minus_x2") {
    CHECK(inv_sqrt_one_minus_x2(0) == make({1}));
    TruncatedSeries s = inv_sqrt_one_minus_x2(4);
    CHECK(s.coefficient(0) == 1);
    CHECK(s.coefficient(1) == 0);
    CHECK(s.coefficient(2) == rat_make(1, 2));
    CHECK(s.coefficient(3) == 0);
    CHECK(s.coefficient(4) == rat_make(3, 8));
    TruncatedSeries p = inv_sqrt_one_minus_x2(2);
    CHECK(p.coefficient(2) == rat_make(1, 2));
    CHECK(p.order() == 2);
}

TEST_CASE("integrate") {
    CHECK(integrate(make({1})) == make({0, 1}));
    TruncatedSeries s = integrate(inv_sqrt_one_minus_x2(2));
    CHECK(s.coefficient(0) == 0);
    CHECK(s.coefficient(1) == 1);
    CHECK(s.coefficient(2) == 0);
    CHECK(s.coefficient(3) == rat_make(1, 6));
    CHECK(integrate(make({0, 2})) == make({0, 0, 1}));
}

TEST_CASE("differentiate") {
    CHECK(differentiate(make({0, 1})) == make({1}));
    CHECK(differentiate(make({0, 0, 1})) == make({0, 2}));
    CHECK(differentiate(make({5})) == make({0}));
}

TEST_CASE("multiply") {
    CHECK(multiply(make({1}), make({1}), 0) == make({1}));
    CHECK(multiply(make({0, 1}), make({0, 1}), 2) == make({0, 0, 1}));

    TruncatedSeries g = arcsin_series(5);
    TruncatedSeries sq = multiply(g, g, 6);
    CHECK(sq.coefficient(2) == 1);
    CHECK(sq.coefficient(4) == rat_make(1, 3));
    CHECK(sq.coefficient(6) == rat_make(8, 45));
    CHECK(sq.coefficient(0) == 0);
    CHECK(sq.coefficient(3) == 0);

    // order 7 would need the x^7 arcsin coefficient
    CHECK_THROWS_AS(multiply(g, g, 7), std::domain_error);
    CHECK(multiply_complete_order(g, g) == 6);
    CHECK(multiply_complete_order(make({1, 1}), make({1, 1, 1})) == 1);
}

TEST_CASE("arcsin_series") {
    CHECK(arcsin_series(1) == make({0, 1}));
    TruncatedSeries s = arcsin_series(5);
    CHECK(s.coefficient(1) == 1);
    CHECK(s.coefficient(3) == rat_make(1, 6));
    CHECK(s.coefficient(5) == rat_make(3, 40));
    CHECK(arcsin_series(3).order() == 3);
    CHECK(arcsin_series(3).coefficient(3) == rat_make(1, 6));
    CHECK_THROWS_AS(arcsin_series(0), std::domain_error);
}

TEST_CASE("f_series") {
    TruncatedSeries f2 = f_series(2);
    CHECK(f2 == make({0, 0, 1}));
    TruncatedSeries f6 = f_series(6);
    CHECK(f6.coefficient(2) == 1);
    CHECK(f6.coefficient(4) == rat_make(1, 3));
    CHECK(f6.coefficient(6) == rat_make(8, 45));
    CHECK(f_series(4).coefficient(4) == rat_make(1, 3));
    CHECK_THROWS_AS(f_series(1), std::domain_error);
}

TEST_CASE("ode_residual vanishes on f, not on x^2") {
    CHECK(ode_residual(f_series(6)).is_zero());
    CHECK(ode_residual(f_series(2)).is_zero());

    TruncatedSeries not_f = make({0, 0, 1, 0, 0, 0, 0});
    TruncatedSeries r = ode_residual(not_f);
    CHECK(r.coefficient(0) == 0);
    CHECK(r.coefficient(2) == -4);  // (1-x^2)*2 - x*2x - 2 = -4x^2
}

TEST_CASE("arcsin coefficients match u_coeff through N=64") {
    long N = 64;
    TruncatedSeries g = arcsin_series(2 * N + 1);
    for (long n = 0; n <= N; ++n) {
        CHECK(g.coefficient(2 * n + 1) == u_coeff(n));
        if (n >= 1) CHECK(g.coefficient(2 * n) == 0);
    }
}

TEST_CASE("f_series coefficients match v_via_cauchy through N=64") {
    long N = 64;
    TruncatedSeries f = f_series(2 * N);
    for (long n = 1; n <= N; ++n) {
        CHECK(f.coefficient(2 * n) == v_via_cauchy(n));
        CHECK(f.coefficient(2 * n - 1) == 0);
    }
    CHECK(f.coefficient(0) == 0);
}

TEST_CASE("ode residual zero for truncations up to N=64") {
    for (long N : {2L, 3L, 8L, 17L, 33L, 64L}) {
        TruncatedSeries r = ode_residual(f_series(2 * N));
        CHECK(r.order() == 2 * N - 2);
        CHECK(r.is_zero());
    }
}

TEST_CASE("differentiate undoes integrate") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 100; ++it) {
        TruncatedSeries s = random_series(rng, 1 + it % 8);
        CHECK(differentiate(integrate(s)) == s);
    }
}

TEST_CASE("multiply is commutative and distributes over addition") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        TruncatedSeries a = random_series(rng, 2 + it % 5);
        TruncatedSeries b = random_series(rng, 2 + (it + 1) % 5);
        TruncatedSeries c = random_series(rng, 2 + (it + 2) % 5);
        long ord = std::min({multiply_complete_order(a, b), multiply_complete_order(a, c),
                             multiply_complete_order(b, a)});
        ord = std::min(ord, std::min(b.order(), c.order()));
        if (ord < 0) continue;
        CHECK(multiply(a, b, ord) == multiply(b, a, ord));
        CHECK(multiply(a, add(b, c), ord) ==
              add(multiply(a, b, ord), multiply(a, c, ord)));
    }
}
