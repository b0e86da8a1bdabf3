#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "greenbound/error.hpp"
#include "greenbound/geom.hpp"

using namespace greenbound;

TEST_CASE("point validation") {
    CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(NAN, 1.0), DomainError);
    CHECK_THROWS_AS(UnimodularMatrix(1, 1, 1, 1), DomainError);
    CHECK_NOTHROW(UnimodularMatrix(2, 1, 1, 1));
    CHECK_THROWS_AS(Rectangle(0, 1, 0, 1), DomainError);
    CHECK_THROWS_AS(Rectangle(1, 0, 1, 2), DomainError);
    CHECK_THROWS_AS(Rectangle(0, 1, 2, 1), DomainError);
}

TEST_CASE("point_u") {
    const UpperHalfPoint i(0, 1), two_i(0, 2);
    CHECK(point_u(i, i) == 1.0);
    CHECK(point_u(i, two_i) == doctest::Approx(1.25).epsilon(1e-15));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> X(-5, 5), Y(0.1, 10);
    for (int k = 0; k < 100; ++k) {
        const UpperHalfPoint z(X(rng), Y(rng)), w(X(rng), Y(rng));
        CHECK(point_u(z, w) == point_u(w, z));
        CHECK(point_u(z, w) > 1.0);
        CHECK(point_u(z, z) == 1.0);
    }
}

TEST_CASE("mobius_apply") {
    const UpperHalfPoint i(0, 1);
    const UpperHalfPoint z(0.3, 1.7);
    CHECK(mobius_apply(UnimodularMatrix::identity(), z) == z);
    const auto Si = mobius_apply(UnimodularMatrix(0, -1, 1, 0), i);
    CHECK(Si.x() == doctest::Approx(0.0));
    CHECK(Si.y() == doctest::Approx(1.0));
    const auto Ti = mobius_apply(UnimodularMatrix(1, 1, 0, 1), i);
    CHECK(Ti.x() == 1.0);
    CHECK(Ti.y() == 1.0);
}

TEST_CASE("u_of_gamma matches the Moebius oracle") {
    const UpperHalfPoint i(0, 1);
    CHECK(u_of_gamma(UnimodularMatrix::identity(), i) == 1.0);
    CHECK(u_of_gamma(UnimodularMatrix(1, 1, 0, 1), i) == doctest::Approx(1.5).epsilon(1e-15));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> E(-50, 50);
    std::uniform_real_distribution<double> X(-5, 5), Y(0.1, 10);
    int checked = 0;
    while (checked < 1000) {
        const std::int64_t a = E(rng), b = E(rng), c = E(rng);
        if (a == 0) continue;
        // choose d with ad - bc = 1 when a divides 1 + bc
        if ((1 + b * c) % a != 0) continue;
        const UnimodularMatrix g(a, b, c, (1 + b * c) / a);
        const UpperHalfPoint z(X(rng), Y(rng));
        const double oracle = point_u(z, mobius_apply(g, z));
        const double direct = u_of_gamma(g, z);
        CHECK(std::abs(direct - oracle) <= 1e-12 * oracle);
        CHECK(u_of_gamma(g.negated(), z) == direct);
        ++checked;
    }
}

TEST_CASE("kernel_L and kernel_J") {
    const double pi = std::numbers::pi;
    CHECK(kernel_L(2.0) == doctest::Approx(std::log(3.0) / (4 * pi)).epsilon(1e-15));
    CHECK(kernel_L(2.0) == doctest::Approx(0.0874248).epsilon(1e-6));
    CHECK(kernel_L(3.0) == doctest::Approx(0.0551589).epsilon(1e-6));
    CHECK(kernel_L(1.0 + 1e-12) > 2.0);
    CHECK_THROWS_AS(kernel_L(1.0), DomainError);
    CHECK_THROWS_AS(kernel_L(0.5), DomainError);
    double prev = kernel_L(1.001);
    for (double u = 1.01; u < 1e6; u *= 1.3) {
        const double v = kernel_L(u);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(kernel_J(2.0, 3.0) == 0.0);
    CHECK(kernel_J(2.0, 2.0) == 0.0);
    CHECK(kernel_J(2.0, 1.5) == doctest::Approx(0.0406502).epsilon(1e-6));
    CHECK(kernel_J(2.0, 1.5) == doctest::Approx((std::log(5.0) - std::log(3.0)) / (4 * pi)).epsilon(1e-14));
    CHECK_THROWS_AS(kernel_J(1.0, 1.5), DomainError);
    CHECK_THROWS_AS(kernel_J(2.0, 1.0), DomainError);
}

TEST_CASE("rectangle cells tile the region") {
    const Rectangle R(-0.5, 0.5, 0.8660254037844386, 2.0);
    const auto first = R.cell(0, 0, 100, 100);
    const auto last = R.cell(99, 99, 100, 100);
    CHECK(first.x_min() == R.x_min());
    CHECK(first.y_min() == R.y_min());
    CHECK(last.x_max() == R.x_max());
    CHECK(last.y_max() == R.y_max());
    CHECK(R.cell(3, 4, 100, 100).x_max() == R.cell(4, 4, 100, 100).x_min());
    CHECK(R.contains(UpperHalfPoint(0, 1)));
    CHECK_FALSE(R.contains(UpperHalfPoint(0, 0.5)));
}

TEST_CASE("fundamental domain reduction") {
    const auto z = reduce_to_fundamental_domain(UpperHalfPoint(0.3, 0.05));
    CHECK(std::abs(z.x()) <= 0.5 + 1e-12);
    CHECK(z.x() * z.x() + z.y() * z.y() >= 1.0 - 1e-12);
    const auto w = reduce_to_fundamental_domain(UpperHalfPoint(7.25, 3.0));
    CHECK(w.x() == doctest::Approx(0.25));
    CHECK(w.y() == 3.0);
}
