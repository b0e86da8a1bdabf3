#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "greenbound/cusps.hpp"
#include "greenbound/error.hpp"
#include "greenbound/quadrature.hpp"

using namespace greenbound;

namespace {

const double pi = std::numbers::pi;

double lambda_series(double xi, double t) {
    double s = 0.0, p = 1.0;
    for (int n = 1; n < 2000; ++n) {
        p *= xi;
        s += p * std::sin(2 * pi * n * t) / n;
        if (std::abs(p) < 1e-18) break;
    }
    return s / pi;
}

BoundReport base_report(double A, double B) {
    return {68.4, -215.8, 18.56, 9.60, 216.0, 4.3, A, B, ArithmeticMode::theorem_exact};
}

}  // namespace

TEST_CASE("r_delta") {
    CHECK(r_delta(2.0) == doctest::Approx(0.026919643087244028).epsilon(1e-14));
    CHECK(r_delta(1e12) == doctest::Approx(1.0 / 48).epsilon(1e-5));
    CHECK(r_delta(1.0 + 1e-10) > 100.0);
    CHECK_THROWS_AS(r_delta(1.0), DomainError);
}

TEST_CASE("Poisson kernel") {
    CHECK(poisson_kernel(0.0) == 1.0);
    CHECK(poisson_kernel(0.5) == doctest::Approx(3.0));
    CHECK_THROWS_AS(poisson_kernel(Complex(0.6, 0.8)), DomainError);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> R(0.0, 0.9), Ph(0.0, 2 * pi);
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.initial_panels = 64;
    for (int k = 0; k < 10; ++k) {
        const Complex z = std::polar(R(rng), Ph(rng));
        const double v = quad::adaptive_simpson<double>(
                             [&](double t) { return poisson_kernel(std::polar(1.0, 2 * pi * t) * z); }, 0.0, 1.0, opt)
                             .value;
        CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("Poisson convolution identity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> R(0.0, 0.8), Ph(0.0, 2 * pi);
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.initial_panels = 64;
    for (int k = 0; k < 10; ++k) {
        const Complex z = std::polar(R(rng), Ph(rng)), e = std::polar(R(rng), Ph(rng));
        auto f = [&](double a) {
            return poisson_kernel(std::polar(1.0, 2 * pi * a) * z) * poisson_kernel(std::polar(1.0, -2 * pi * a) * e);
        };
        const double v = quad::adaptive_simpson<double>(f, 0.0, 1.0, opt).value;
        CHECK(std::abs(v - poisson_kernel(z * e)) <= 1e-8);
    }
}

TEST_CASE("lambda(xi, t)") {
    CHECK(std::abs(lambda_xi(0.0, 0.3)) == 0.0);
    CHECK(std::abs(lambda_xi(0.7, 0.0)) == 0.0);
    CHECK(lambda_xi(0.5, 0.25).real() == doctest::Approx(lambda_series(0.5, 0.25)).epsilon(1e-10));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> X(-0.9, 0.9), T(-2.0, 2.0);
    for (int k = 0; k < 200; ++k) {
        const double xi = X(rng), t = T(rng);
        const Complex v = lambda_xi(xi, t);
        CHECK(std::abs(v.imag()) <= 1e-15);
        CHECK(std::abs(v.real() - lambda_series(xi, t)) <= 1e-10);
    }
    CHECK_THROWS_AS(lambda_xi(1.0, 0.2), DomainError);
}

TEST_CASE("lambda integral bound on a grid") {
    CHECK(lambda_integral_check(0.0, 1.0).lhs == 0.0);
    for (double xi : {-0.5, 0.2, 0.6, 0.9}) {
        for (double t : {0.3, 1.0, 3.7, 10.0}) {
            const auto r = lambda_integral_check(xi, t);
            INFO("xi=" << xi << " t=" << t);
            CHECK(r.bound == doctest::Approx(1.0 / (12 * t)));
            CHECK(r.lhs <= r.bound);
        }
    }
}

TEST_CASE("N_delta_eps bracket on a 125-point grid") {
    const Complex xis[] = {0.0, 0.5, -0.5, 0.9, Complex(0.0, 0.5)};
    int checked = 0;
    for (double delta : {1.25, 1.5, 2.0, 3.0, 4.0}) {
        for (double eps : {0.05, 0.1, 0.2, 0.3, 0.5}) {
            for (Complex xi : xis) {
                const double N = N_delta_eps(delta, eps, xi);
                const double main = N_delta_eps_main(delta, eps, xi);
                INFO("delta=" << delta << " eps=" << eps << " xi=" << xi);
                CHECK(std::abs(N - main) <= eps * r_delta(delta));
                ++checked;
            }
        }
    }
    CHECK(checked == 125);
}

TEST_CASE("N_delta_eps special cases") {
    // xi = 0: the Poisson kernel is 1 and N is the closed-form J integral
    const double v = N_delta_eps(2.0, 0.3, 0.0);
    CHECK(v == doctest::Approx((2 / pi) * std::atan(std::sqrt(0.5)) / 0.3).epsilon(1e-9));
    CHECK(N_delta_eps(2.0, 1e8, 0.5) < 1e-7);
    const double w = N_delta_eps(2.0, 0.3, 0.5);
    CHECK(std::abs(w - (1 / 0.3) * (2 / pi) * std::atan(std::sqrt(0.5)) + std::log(0.5) / (2 * pi)) <=
          0.3 * r_delta(2.0));
}

TEST_CASE("admissible_eps") {
    const auto a = admissible_eps(2.0, 1.0);
    CHECK(a.eps_prime_max == doctest::Approx(0.5176380902050415).epsilon(1e-14));
    CHECK(a.eps_max == doctest::Approx(0.1387007082420295).epsilon(1e-14));
    CHECK(admissible_eps(1.0 + 1e-12, 1.0).eps_prime_max == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(admissible_eps(2.0, 2.0).eps_prime_max == doctest::Approx(2 * a.eps_prime_max).epsilon(1e-15));
    // the extremal pair itself is admissible
    CHECK_NOTHROW(CuspGeometry{a.eps_max, a.eps_prime_max, 2.0, 1.0, 2}.check());
}

TEST_CASE("extend_bounds") {
    const auto base = base_report(-17371.7, 9165.7);
    const CuspGeometry g{0.05, 0.2, 2.0, 1.0, 2};
    const auto c = extend_bounds(base, g, CuspCase::c);
    REQUIRE(c.A_tilde.has_value());
    CHECK(*c.A_tilde - base.A == doctest::Approx(6.0709666224590293).epsilon(1e-12));
    CHECK(*c.B_tilde - base.B == doctest::Approx(6.0925023369288246).epsilon(1e-12));
    CHECK((*c.B_tilde - *c.A_tilde) - (base.B - base.A) == doctest::Approx(2 * 2 * 0.2 * r_delta(2.0)).epsilon(1e-8));
    CHECK(*c.A_tilde <= *c.B_tilde);

    const auto a = extend_bounds(base, g, CuspCase::a);
    CHECK(a.base_A == base.A);
    CHECK(a.base_B == base.B);
    CHECK_FALSE(a.A_tilde.has_value());
    CHECK(a.offset_terms.find("log(eps y_c(z))") != std::string::npos);
    CHECK(extend_bounds(base, g, CuspCase::a_prime).offset_terms.find("y_c(w)") != std::string::npos);
    CHECK(extend_bounds(base, g, CuspCase::b).offset_terms.find("eps_c y_c(w)") != std::string::npos);

    auto one = g;
    one.count_pm1 = 1;
    CHECK(*extend_bounds(base, one, CuspCase::c).A_tilde - base.A == doctest::Approx(6.0709666224590293 / 2));

    auto bad = g;
    bad.eps_prime = 0.6;
    CHECK_THROWS_AS(extend_bounds(base, bad, CuspCase::c), ConstraintError);
    bad = g;
    bad.eps = 0.1;  // 0.1 (2 + sqrt 3) > 0.2
    CHECK_THROWS_AS(extend_bounds(base, bad, CuspCase::a), ConstraintError);
    CHECK_THROWS_AS(extend_bounds(base_report(10.0, -10.0), g, CuspCase::c), ConstraintError);
    CHECK(cusp_case_from_string("a-prime") == CuspCase::a_prime);
    CHECK_THROWS_AS(cusp_case_from_string("d"), ConstraintError);
}

TEST_CASE("cusp separation lemma") {
    const UpperHalfPoint z(0.0, 3.0);
    CHECK_FALSE(separation_counterexample(z, z, 2.0).has_value());
    // lower points do meet non-translations
    CHECK(separation_counterexample(UpperHalfPoint(0.0, 1.0), UpperHalfPoint(0.0, 1.0), 2.0).has_value());

    const double m = min_u_over_group(UpperHalfPoint(0.0, 10.0), UpperHalfPoint(0.3, 0.5));
    CHECK(m >= 2.0);
    const auto red = reduce_to_fundamental_domain(UpperHalfPoint(0.3, 0.5));
    CHECK(m == doctest::Approx(point_u(UpperHalfPoint(0.0, 10.0), UpperHalfPoint(red.x() - std::round(red.x()), red.y())))
                   .epsilon(1e-9));

    const auto rep = check_cusp_separation(2.0, 0.1, 0.5, 25);
    CHECK(rep.configurations == 50);
    CHECK(rep.ok());
    INFO(rep.first_counterexample);
    CHECK_THROWS_AS(check_cusp_separation(2.0, 0.1, 0.6, 5), ConstraintError);
}
