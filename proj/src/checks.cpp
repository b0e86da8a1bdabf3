#include "greenbound/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "greenbound/constants.hpp"
#include "greenbound/cusps.hpp"
#include "greenbound/quadrature.hpp"
#include "greenbound/specfun.hpp"
#include "greenbound/transforms.hpp"

namespace greenbound {

namespace {

constexpr double pi = std::numbers::pi;

// Runs body(record) where record(ok, description) tallies one sample.
template <class Body>
SuiteResult run_suite(const std::string& name, Body&& body) {
    SuiteResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    auto record = [&](bool ok, const auto& describe) {
        ++r.samples;
        if (ok) return;
        ++r.violations;
        if (r.first_violation.empty()) r.first_violation = describe();
    };
    try {
        body(record);
    } catch (const std::exception& e) {
        ++r.violations;
        if (r.first_violation.empty()) r.first_violation = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

template <class... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream os;
    os.precision(12);
    ((os << parts), ...);
    return os.str();
}

TrapezoidParams reference_trapezoid() {
    return {constants::ref_delta, constants::ref_alpha_plus, constants::ref_alpha_minus, constants::ref_beta_plus,
            constants::ref_beta_minus};
}

}  // namespace

SuiteResult suite_P_neg1_bracket(int samples, std::uint64_t seed) {
    return run_suite("P^-1 bracket", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < samples; ++k) {
            const double u = 1.0 + 2.0 * (1.0 - unit(rng)) * (1.0 - 1e-9);
            const double lam = unit(rng) * 0.5 / (u - 1.0);
            // s(1 - s) = lam with Re s >= 1/2: real s for lam <= 1/4, on the line Re s = 1/2 beyond
            const Complex s = lam <= 0.25 ? Complex(0.5 + std::sqrt(0.25 - lam), 0.0)
                                          : Complex(0.5, std::sqrt(lam - 0.25));
            const Complex v = legendre_P_neg1(s, u);
            const double root = std::sqrt((u - 1.0) / (u + 1.0));
            const double lo = (2.0 - 4.0 / pi) * root, hi = (4.0 / pi) * root;
            const double slack = 1e-13 * hi;
            record(std::abs(v.imag()) <= 1e-12 * hi && v.real() >= lo - slack && v.real() <= hi + slack,
                   [&] { return describe("u=", u, " s=", s, " value=", v, " bracket=[", lo, ",", hi, "]"); });
        }
    });
}

SuiteResult suite_Q_deriv_bracket(int samples, std::uint64_t seed) {
    return run_suite("Q' bracket", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < samples; ++k) {
            const double nu = 10.0 * unit(rng);
            const double u = 1.0 + 99.0 * (1.0 - unit(rng));
            const double q = legendre_Q_deriv(nu, u);
            const double lo = -std::pow(2.0 / (u + 1.0), nu) / (u * u - 1.0);
            record(q <= 0.0 && q >= lo * (1.0 + 1e-12),
                   [&] { return describe("nu=", nu, " u=", u, " value=", q, " lower=", lo); });
        }
    });
}

SuiteResult suite_P2_regular_bound() {
    return run_suite("P^-2 regular bound", [&](auto&& record) {
        const double ts[] = {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0};
        const double us[] = {1.0005, 1.001, 1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0, 60.0, 100.0};
        for (double sigma : {0.1, 0.25, 0.306, 0.45}) {
            const StripParameter sp(sigma);
            for (double t : ts) {
                const Complex s(0.5, t);
                const double lam = std::pow(std::abs(s * (1.0 - s)), -1.25);
                for (double u : us) {
                    const double v = std::abs(legendre_P_negm(2, s, u));
                    const double bound = lam * p_sigma(sp, u) / (u * u - 1.0);
                    record(v <= bound, [&] {
                        return describe("sigma=", sigma, " s=", s, " u=", u, " |P|=", v, " bound=", bound);
                    });
                }
            }
        }
    });
}

SuiteResult suite_gamma_ratio_sandwich(int samples, std::uint64_t seed) {
    return run_suite("gamma quotient sandwich", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> A(0.1, 5.0), D(0.0, 5.0), Y(-50.0, 50.0);
        for (int k = 0; k < samples; ++k) {
            const double a = A(rng), b = a + D(rng), y = Y(rng);
            const double oracle = std::exp((log_gamma_complex({a, y}) - log_gamma_complex({b, y})).real());
            const auto g = gamma_ratio_bounds(a, b, y);
            const double slack = 1e-12 * oracle;
            record(g.lower <= oracle + slack && oracle <= g.upper + slack, [&] {
                return describe("a=", a, " b=", b, " y=", y, " ratio=", oracle, " bounds=[", g.lower, ",", g.upper, "]");
            });
        }
    });
}

SuiteResult suite_h_U_bracket(int samples, std::uint64_t seed) {
    return run_suite("h_U bracket", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < samples; ++k) {
            const double U = 1.01 + (3.0 - 1.01) * unit(rng) * (1.0 - 1e-9);
            Complex s;
            if (k % 2 == 0) {
                s = 0.5 + 0.5 * unit(rng);  // real s in [1/2, 1]
            } else {
                const double lam = unit(rng) * 0.5 / (U - 1.0);
                s = lam <= 0.25 ? Complex(0.5 + std::sqrt(0.25 - lam), 0.0) : Complex(0.5, std::sqrt(lam - 0.25));
            }
            const Complex h = h_U(s, U);
            const double lo = (4.0 * pi - 8.0) * (U - 1.0), hi = 8.0 * (U - 1.0);
            const double slack = 1e-12 * hi;
            record(std::abs(h.imag()) <= slack && h.real() >= lo - slack && h.real() <= hi + slack,
                   [&] { return describe("U=", U, " s=", s, " h=", h, " bracket=[", lo, ",", hi, "]"); });
        }
    });
}

SuiteResult suite_lambda_integral() {
    return run_suite("lambda integral bound", [&](auto&& record) {
        for (double xi : {-0.5, 0.2, 0.6, 0.9}) {
            for (double t : {0.3, 1.0, 3.7, 10.0}) {
                const auto c = lambda_integral_check(xi, t);
                record(c.lhs <= c.bound,
                       [&] { return describe("xi=", xi, " t=", t, " lhs=", c.lhs, " bound=", c.bound); });
            }
        }
    });
}

SuiteResult suite_N_bracket() {
    return run_suite("N_delta,eps bracket", [&](auto&& record) {
        const Complex xis[] = {0.0, 0.5, -0.5, 0.9, Complex(0.0, 0.5)};
        for (double delta : {1.25, 1.5, 2.0, 3.0, 4.0}) {
            for (double eps : {0.05, 0.1, 0.2, 0.3, 0.5}) {
                for (Complex xi : xis) {
                    const double gap = std::abs(N_delta_eps(delta, eps, xi) - N_delta_eps_main(delta, eps, xi));
                    const double bound = eps * r_delta(delta);
                    record(gap <= bound, [&] {
                        return describe("delta=", delta, " eps=", eps, " xi=", xi, " gap=", gap, " bound=", bound);
                    });
                }
            }
        }
    });
}

SuiteResult suite_poisson_convolution(int samples, std::uint64_t seed) {
    return run_suite("Poisson convolution", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> R(0.0, 0.8), Ph(0.0, 2.0 * pi);
        quad::Options opt;
        opt.rel_tol = 1e-12;
        opt.initial_panels = 64;
        for (int k = 0; k < samples; ++k) {
            const Complex z = std::polar(R(rng), Ph(rng)), e = std::polar(R(rng), Ph(rng));
            auto f = [&](double a) {
                return poisson_kernel(std::polar(1.0, 2.0 * pi * a) * z) *
                       poisson_kernel(std::polar(1.0, -2.0 * pi * a) * e);
            };
            const double lhs = quad::adaptive_simpson<double>(f, 0.0, 1.0, opt).value;
            const double rhs = poisson_kernel(z * e);
            record(std::abs(lhs - rhs) <= 1e-8, [&] { return describe("zeta=", z, " eta=", e, " lhs=", lhs, " rhs=", rhs); });
        }
    });
}

SuiteResult suite_cusp_separation(int configurations, std::uint64_t seed) {
    return run_suite("cusp separation (a)/(b)", [&](auto&& record) {
        const int half = std::max(1, configurations / 2);
        const auto rep = check_cusp_separation(2.0, 0.1, 0.5, half, seed);
        for (int k = 0; k < rep.configurations; ++k) {
            const bool bad = k < rep.part_a_violations + rep.part_b_violations;
            record(!bad, [&] { return rep.first_counterexample; });
        }
    });
}

SuiteResult suite_u_of_gamma_oracle(int samples, std::uint64_t seed) {
    return run_suite("u_of_gamma vs Moebius", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> E(-50, 50);
        std::uniform_real_distribution<double> X(-5, 5), Y(0.1, 10);
        int done = 0;
        while (done < samples) {
            const std::int64_t a = E(rng), b = E(rng), c = E(rng);
            if (a == 0 || (1 + b * c) % a != 0) continue;
            const UnimodularMatrix g(a, b, c, (1 + b * c) / a);
            const UpperHalfPoint z(X(rng), Y(rng));
            const double oracle = point_u(z, mobius_apply(g, z));
            const double direct = u_of_gamma(g, z);
            record(std::abs(direct - oracle) <= 1e-12 * oracle,
                   [&] { return describe("g=(", a, ",", b, ",", c, ") z=", z.x(), "+", z.y(), "i"); });
            ++done;
        }
    });
}

SuiteResult suite_count_soundness(const CountCertificate& cert, int samples, std::uint64_t seed) {
    return run_suite("count_bound soundness", [&](auto&& record) {
        const auto& R = cert.region;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> X(R.x_min(), R.x_max()), Y(R.y_min(), R.y_max());
        const double wx = (R.x_max() - R.x_min()) / cert.nx, wy = (R.y_max() - R.y_min()) / cert.ny;
        for (int k = 0; k < samples; ++k) {
            const UpperHalfPoint z(X(rng), Y(rng));
            const int i = std::clamp(static_cast<int>((z.x() - R.x_min()) / wx), 0, cert.nx - 1);
            const int j = std::clamp(static_cast<int>((z.y() - R.y_min()) / wy), 0, cert.ny - 1);
            const auto n = exact_count(z, z, cert.U);
            record(n <= 2 * cert.per_cell_counts[i][j] && n <= cert.bound, [&] {
                return describe("z=", z.x(), "+", z.y(), "i exact=", n, " cell bound=", 2 * cert.per_cell_counts[i][j]);
            });
        }
    });
}

SuiteResult suite_count_soundness(int samples, std::uint64_t seed) {
    return run_suite("count_bound soundness", [&](auto&& record) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double w = constants::y0_x_max - constants::y0_x_min, h = constants::y0_y_max - constants::y0_y_min;
        for (int k = 0; k < samples; ++k) {
            const UpperHalfPoint z(constants::y0_x_min + w * unit(rng), constants::y0_y_min + h * unit(rng));
            const double U = 1.0 + 19.0 * unit(rng);
            // a random sub-rectangle of Y0 containing z, split 2x2
            const double x0 = z.x() - (z.x() - constants::y0_x_min) * unit(rng);
            const double x1 = z.x() + (constants::y0_x_max - z.x()) * unit(rng);
            const double y0 = z.y() - (z.y() - constants::y0_y_min) * unit(rng);
            const double y1 = z.y() + (constants::y0_y_max - z.y()) * unit(rng);
            const auto cert = count_bound(Rectangle(x0, x1, y0, y1), U, 2, 2, 1);
            const auto n = exact_count(z, z, U);
            record(n <= cert.bound, [&] {
                return describe("z=", z.x(), "+", z.y(), "i U=", U, " exact=", n, " bound=", cert.bound);
            });
        }
    });
}

SuiteResult suite_trapezoid_areas() {
    return run_suite("h_U+-(1) vs trapezoid areas", [&](auto&& record) {
        const auto p = reference_trapezoid();
        for (double U : {2.0, 2.5, 4.0, 7.0, 17.0, 40.0, 1e3, 1e5}) {
            const double V = V_of_U(p, U), T = T_of_U(p, U);
            const double plus = 2.0 * pi * (U - 1.0) + pi * (V - U);
            const double minus = 2.0 * pi * (U - 1.0) - pi * (U - T);
            const double hp = h_U_pm(p, Sign::plus, 1.0, U).real();
            const double hm = h_U_pm(p, Sign::minus, 1.0, U).real();
            record(std::abs(hp - plus) <= 1e-10 * plus, [&] { return describe("+ U=", U, " h=", hp, " area=", plus); });
            record(std::abs(hm - minus) <= 1e-10 * minus, [&] { return describe("- U=", U, " h=", hm, " area=", minus); });
        }
    });
}

SuiteResult suite_P2_closed_form() {
    return run_suite("P^-2_0 closed form", [&](auto&& record) {
        for (double u : {1.0001, 1.001, 1.01, 1.3, 2.0, 2.9, 5.0, 17.0, 100.0, 1e4, 1e7}) {
            const double v = legendre_P_negm(2, 1.0, u).real();
            const double want = (u - 1.0) / (2.0 * u + 2.0);
            record(std::abs(v - want) <= 1e-12 * want, [&] { return describe("u=", u, " value=", v, " want=", want); });
        }
    });
}

std::vector<SuiteResult> run_property_suites() {
    return {suite_P_neg1_bracket(),   suite_Q_deriv_bracket(),    suite_P2_regular_bound(),
            suite_gamma_ratio_sandwich(), suite_h_U_bracket(),   suite_lambda_integral(),
            suite_N_bracket(),         suite_poisson_convolution(), suite_cusp_separation(),
            suite_u_of_gamma_oracle(), suite_count_soundness(),   suite_trapezoid_areas(),
            suite_P2_closed_form()};
}

}  // namespace greenbound
