#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "greenbound/constants.hpp"
#include "greenbound/error.hpp"
#include "greenbound/quadrature.hpp"
#include "greenbound/transforms.hpp"

using namespace greenbound;

namespace {

const double pi = std::numbers::pi;

TrapezoidParams reference() {
    return {constants::ref_delta, constants::ref_alpha_plus, constants::ref_alpha_minus, constants::ref_beta_plus,
            constants::ref_beta_minus};
}

// Mehler-Fock transform 2 pi int_1^b g(u) P_{s-1}(u) du with P_{s-1}(u) = F(1-s, s; 1; (1-u)/2), b < 3.
template <class G>
Complex mehler_fock(G&& g, Complex s, double b) {
    auto f = [&](double u) { return g(u) * hyp2f1(1.0 - s, s, 1.0, (1.0 - u) / 2.0); };
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.initial_panels = 64;
    return 2.0 * pi * quad::adaptive_simpson<Complex>(f, 1.0, b, opt).value;
}

}  // namespace

TEST_CASE("T and V") {
    const auto p = reference();
    const double T2 = T_of_U(p, 2.0);
    CHECK(T2 >= 1.0);
    CHECK(T2 == doctest::Approx(2.0 - 0.668 * std::pow(2.0, -1.00296) * 3.0).epsilon(1e-15));
    CHECK(T2 == doctest::Approx(1.0000537).epsilon(1e-7));
    auto q = p;
    q.beta_minus = 1e-12;
    CHECK(T_of_U(q, 5.0) == doctest::Approx(5.0).epsilon(1e-10));
    CHECK_THROWS_AS(T_of_U(p, 1.5), DomainError);

    CHECK(V_of_U(p, 1.0) == 1.0);
    CHECK(V_of_U(p, 2.0) == doctest::Approx(5.977).epsilon(1e-3));
    q = p;
    q.beta_plus = 3.0;
    CHECK(V_of_U(q, 2.0) > V_of_U(p, 2.0));

    // extremal beta- still keeps T >= 1
    q = p;
    q.beta_minus = q.beta_minus_critical();
    for (double U = 2.0; U < 1e6; U *= 1.7) CHECK(T_of_U(q, U) >= 1.0 - 1e-12);
    CHECK(p.beta_minus_critical() == doctest::Approx(0.6680359).epsilon(1e-6));
}

TEST_CASE("trapezoid kernels") {
    const auto p = reference();
    CHECK(g_U_pm(p, Sign::plus, 2.0, 1.5) == 1.0);
    CHECK(g_U_pm(p, Sign::plus, 2.0, 10.0) == 0.0);
    const double V = V_of_U(p, 2.0);
    CHECK(g_U_pm(p, Sign::plus, 2.0, 0.5 * (2.0 + V)) == doctest::Approx(0.5));
    CHECK(g_U_pm(p, Sign::minus, 3.0, 3.5) == 0.0);
    const double T = T_of_U(p, 3.0);
    CHECK(g_U_pm(p, Sign::minus, 3.0, 0.5 * (3.0 + T)) == doctest::Approx(0.5));
}

TEST_CASE("h_U") {
    for (double U : {1.1, 1.5, 2.0, 2.9}) CHECK(h_U(1.0, U).real() == doctest::Approx(2 * pi * (U - 1)).epsilon(1e-13));
    const double v = h_U(1.0, 2.0).real();
    CHECK(v >= 4 * pi - 8);
    CHECK(v <= 8);
    // s(1-s)(U-1) = 1/2 at U = 1.1 needs s(1-s) = 5, s = 1/2 + i sqrt(19)/2
    const Complex s{0.5, std::sqrt(19.0) / 2};
    const double w = h_U(s, 1.1).real();
    CHECK(w >= (4 * pi - 8) * 0.1);
    CHECK(w <= 8 * 0.1);
    // against the Mehler-Fock integral of the indicator
    const Complex direct = mehler_fock([](double) { return 1.0; }, Complex(0.3, 1.2), 1.8);
    const Complex via = h_U(Complex(0.3, 1.2), 1.8);
    CHECK(std::abs(via - direct) <= 1e-9 * std::abs(direct));
    CHECK_THROWS_AS(h_U(0.5, 3.0), DomainError);
}

TEST_CASE("h_U_pm at s = 1 equals the trapezoid areas") {
    const auto p = reference();
    for (double U : {2.0, 2.5, 7.0, 40.0, 1e3}) {
        const double V = V_of_U(p, U), T = T_of_U(p, U);
        const double plus = 2 * pi * (U - 1) + pi * (V - U);
        const double minus = 2 * pi * (U - 1) - pi * (U - T);
        CHECK(std::abs(h_U_pm(p, Sign::plus, 1.0, U).real() - plus) <= 1e-10 * plus);
        CHECK(std::abs(h_U_pm(p, Sign::minus, 1.0, U).real() - minus) <= 1e-10 * minus);
    }
}

TEST_CASE("h_U_pm against Mehler-Fock quadrature of the trapezoids") {
    const TrapezoidParams p{1.2, 0.05, 0.01, 1.0, 0.4};
    const double U = 1.3;
    const double V = V_of_U(p, U), T = T_of_U(p, U);
    REQUIRE(V < 3.0);
    for (Complex s : {Complex(0.3, 0.0), Complex(0.5, 2.0), Complex(0.8, -0.7), Complex(1.0, 0.0)}) {
        const Complex plus = mehler_fock([&](double u) { return g_U_pm(p, Sign::plus, U, u); }, s, V);
        const Complex minus = mehler_fock([&](double u) { return g_U_pm(p, Sign::minus, U, u); }, s, U);
        INFO("s=" << s << " T=" << T);
        CHECK(std::abs(h_U_pm(p, Sign::plus, s, U) - plus) <= 1e-8 * std::abs(plus));
        CHECK(std::abs(h_U_pm(p, Sign::minus, s, U) - minus) <= 1e-8 * std::abs(minus));
    }
}

TEST_CASE("h_a, c_a, g_1") {
    CHECK(h_a(2.0, 1.0).real() == doctest::Approx(0.5).epsilon(1e-15));
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> A(1.05, 4.0), R(-2, 3), Im(-5, 5);
    int displayed_matches = 0, corrected_matches = 0;
    for (int k = 0; k < 200; ++k) {
        const double a = A(rng), b = A(rng);
        const Complex s{R(rng), Im(rng)};
        CHECK(std::abs(h_a(a, s) - h_a(a, 1.0 - s)) <= 1e-14 * std::abs(h_a(a, s)));
        const Complex direct = h_a(a, s) - h_a(b, s);
        const Complex corrected = (b * (b - 1) - a * (a - 1)) / ((a - s) * (a - 1.0 + s) * (b - s) * (b - 1.0 + s));
        if (std::abs(corrected - direct) <= 1e-12 * std::abs(direct)) ++corrected_matches;
        if (std::abs(h_a_difference_displayed(a, b, s) - direct) <= 1e-12 * std::abs(direct)) ++displayed_matches;
    }
    // The identity as printed, with (b + 1 - s), does not reproduce h_a - h_b; (b - 1 + s) does.
    CHECK(corrected_matches == 200);
    CHECK(displayed_matches == 0);

    CHECK_THROWS_AS(h_a(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(h_a(2.0, -1.0), DomainError);
    CHECK(c_a(2.0, pi / 6) == doctest::Approx(3.0 / pi).epsilon(1e-15));
    CHECK(g_1(2.0) == doctest::Approx(std::log(3.0) / (4 * pi)).epsilon(1e-15));
}

TEST_CASE("closed form of the trapezoid excess integral") {
    // int_delta^inf (V - U)/(U^2 - 1) dU = beta / (alpha delta^alpha), likewise for U - T
    const auto p = reference();
    for (Sign sg : {Sign::plus, Sign::minus}) {
        auto f = [&](double t) {
            const double U = std::exp(t);
            const double gap = sg == Sign::plus ? V_of_U(p, U) - U : U - T_of_U(p, U);
            return gap * U / (U * U - 1);
        };
        const double a = p.alpha(sg), b = p.beta(sg);
        quad::Options opt;
        opt.rel_tol = 1e-12;
        // integrate up to U = e^{200} and add the exact remainder beta e^{-200 alpha} / alpha
        double v = quad::adaptive_simpson<double>(f, std::log(2.0), 200.0, opt).value;
        v += b * std::exp(-200.0 * a) / a;
        CHECK(v == doctest::Approx(b / (a * std::pow(2.0, a))).epsilon(1e-9));
    }
}

TEST_CASE("D integrals") {
    const auto p = reference();
    const auto Dp = D_integral(p, Sign::plus, StripParameter(constants::ref_sigma_plus));
    const auto Dm = D_integral(p, Sign::minus, StripParameter(constants::ref_sigma_minus));
    // independent mpmath quadrature of the same integrals
    CHECK(Dp.value == doctest::Approx(18.56380687916608).epsilon(1e-7));
    CHECK(Dm.value == doctest::Approx(9.601870017958753).epsilon(1e-7));
    CHECK(Dp.tail_bound <= 1e-8 * Dp.value);
    CHECK(Dm.tail_bound <= 1e-8 * Dm.value);
    const auto Dp2 = D_integral(p, Sign::plus, StripParameter(constants::ref_sigma_plus), 5e-11);
    CHECK(std::abs(Dp2.value - Dp.value) <= 1e-4 * Dp.value);
    // the majorant really dominates the integrand beyond the cutoff
    for (double lm : {5.0, 20.0, 60.0}) {
        const double head = quad::adaptive_simpson<double>(
            [&](double t) { return std::exp(log_D_integrand(p, Sign::plus, StripParameter(0.306), t)); }, lm, lm + 40)
                                .value;
        CHECK(head <= D_tail_bound(p, Sign::plus, StripParameter(0.306), lm));
    }
    CHECK_THROWS_AS(D_integral(p, Sign::plus, StripParameter(0.03)), DomainError);
}

TEST_CASE("I_delta_pm obeys its regularity bound") {
    const auto p = reference();
    const StripParameter sp(constants::ref_sigma_plus), sm(constants::ref_sigma_minus);
    const double Dp = D_integral(p, Sign::plus, sp).value;
    const double Dm = D_integral(p, Sign::minus, sm).value;
    for (Complex s : {Complex(0.5, 5.0), Complex(0.31, 1.0), Complex(0.69, -3.0)}) {
        const double lam = std::pow(std::abs(s * (1.0 - s)), -1.25);
        CHECK(std::abs(I_delta_pm(p, Sign::plus, s, sp).value) <= Dp * lam);
        CHECK(std::abs(I_delta_pm(p, Sign::minus, s, sm).value) <= Dm * lam);
    }
    CHECK_THROWS_AS(I_delta_pm(p, Sign::plus, Complex(0.2, 1.0), sp), DomainError);
}

TEST_CASE("I_delta_pm against mpmath quadrature") {
    const auto p = reference();
    struct Case {
        Complex s;
        Sign sign;
        double sigma;
        Complex want;  // mpmath, integrated to log U = 60
    };
    const Case cases[] = {
        {{0.5, 5.0}, Sign::plus, 0.306, {-0.0025747953064717849, 0.0}},
        {{0.3, 2.0}, Sign::minus, 0.25, {0.031802432094886042, -0.021834088067966584}},
        {{0.7, -1.0}, Sign::plus, 0.29, {0.10883057073036729, -0.36465552851012017}},
    };
    for (const auto& c : cases) {
        const auto r = I_delta_pm(p, c.sign, c.s, StripParameter(c.sigma));
        INFO("s=" << c.s);
        CHECK(std::abs(r.value - c.want) <= 1e-8);
    }
}
