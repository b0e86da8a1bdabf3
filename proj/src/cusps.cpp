#include "greenbound/cusps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "greenbound/error.hpp"
#include "greenbound/lattice.hpp"
#include "greenbound/quadrature.hpp"

namespace greenbound {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double expansion(double delta) { return delta + std::sqrt(delta * delta - 1.0); }

// L(1 + x^2/2) = log(1 + 4/x^2) / (4 pi)
double L_of_x(double x) { return std::log1p(4.0 / (x * x)) / (4.0 * pi); }

double arctan_term(double delta) { return 1.0 - (2.0 / pi) * std::atan(std::sqrt((delta - 1.0) / 2.0)); }

bool le_with_slack(double a, double b) { return a <= b + 1e-12 * std::abs(b); }

}  // namespace

void CuspGeometry::check() const {
    if (!(delta > 1.0)) throw ConstraintError("delta > 1", "delta = " + fmt(delta));
    if (!(eps > 0.0)) throw ConstraintError("eps > 0", "eps = " + fmt(eps));
    if (!(eps_prime > eps)) throw ConstraintError("eps' > eps", "eps' = " + fmt(eps_prime));
    if (!(min_c > 0.0)) throw ConstraintError("min_c > 0", "min_c = " + fmt(min_c));
    if (count_pm1 != 1 && count_pm1 != 2)
        throw ConstraintError("count_pm1 in {1, 2}", "count_pm1 = " + std::to_string(count_pm1));
    const auto lim = admissible_eps(delta, min_c);
    if (!le_with_slack(eps_prime, lim.eps_prime_max))
        throw ConstraintError("eps' (delta + sqrt(delta^2-1))^(1/2) <= min_c",
                              "eps' = " + fmt(eps_prime) + " exceeds " + fmt(lim.eps_prime_max));
    if (!le_with_slack(expansion(delta) * eps, eps_prime))
        throw ConstraintError("(delta + sqrt(delta^2-1)) eps <= eps'",
                              "eps = " + fmt(eps) + " exceeds " + fmt(eps_prime / expansion(delta)));
}

const char* to_string(CuspCase c) {
    switch (c) {
        case CuspCase::a: return "a";
        case CuspCase::a_prime: return "a-prime";
        case CuspCase::b: return "b";
        case CuspCase::c: return "c";
    }
    return "?";
}

CuspCase cusp_case_from_string(const std::string& s) {
    if (s == "a") return CuspCase::a;
    if (s == "a-prime" || s == "a'" || s == "a_prime") return CuspCase::a_prime;
    if (s == "b") return CuspCase::b;
    if (s == "c") return CuspCase::c;
    throw ConstraintError("case", "unknown cusp case '" + s + "'");
}

double r_delta(double delta) {
    if (!(delta > 1.0)) throw DomainError("r_delta needs delta > 1");
    return (std::sqrt(2.0 / (delta - 1.0)) + std::atan(std::sqrt((delta - 1.0) / 2.0))) / (24.0 * pi);
}

double poisson_kernel(Complex zeta) {
    const double r2 = std::norm(zeta);
    if (!(r2 < 1.0)) throw DomainError("Poisson kernel needs |zeta| < 1");
    return (1.0 - r2) / std::norm(1.0 - zeta);
}

Complex lambda_xi(Complex xi, double t) {
    if (!(std::abs(xi) < 1.0)) throw DomainError("lambda(xi, t) needs |xi| < 1");
    const Complex e = std::polar(1.0, 2.0 * pi * t);
    return (std::log(1.0 - std::conj(e) * xi) - std::log(1.0 - e * xi)) / Complex(0.0, 2.0 * pi);
}

LambdaIntegralCheck lambda_integral_check(double xi, double t) {
    if (!(t > 0.0)) throw DomainError("lambda integral check needs t > 0");
    if (!(std::abs(xi) < 1.0)) throw DomainError("lambda integral check needs |xi| < 1");
    const double near_zero = 2.0 * xi / (1.0 - xi);
    auto f = [&](double y) { return y < 1e-9 ? near_zero : lambda_xi(xi, y).real() / y; };
    quad::Options opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-13;
    opt.initial_panels = 16 + 16 * static_cast<int>(std::ceil(t));
    const double integral = quad::adaptive_simpson<double>(f, 0.0, t, opt).value;
    return {std::abs(integral + 0.5 * std::log1p(-xi)), 1.0 / (12.0 * t)};
}

double N_delta_eps(double delta, double eps, Complex xi) {
    if (!(delta > 1.0)) throw DomainError("N_delta_eps needs delta > 1");
    if (!(eps > 0.0)) throw DomainError("N_delta_eps needs eps > 0");
    if (!(std::abs(xi) < 1.0)) throw DomainError("N_delta_eps needs |xi| < 1");
    const double tau = std::sqrt(2.0 * delta - 2.0) / eps;
    const double Ld = kernel_L(delta);
    quad::Options opt;
    opt.rel_tol = 0.0;
    opt.abs_tol = 0.5e-10;
    opt.initial_panels = 16 + 8 * static_cast<int>(std::ceil(tau));
    double total = 0.0;
    // t = +-tau v^2 removes the logarithmic singularity at t = 0
    for (double side : {1.0, -1.0}) {
        auto f = [&](double v) {
            if (v <= 0.0) return 0.0;
            const double t = tau * v * v;
            const double J = std::max(0.0, L_of_x(eps * t) - Ld);
            return J * poisson_kernel(std::polar(1.0, 2.0 * pi * side * t) * xi) * 2.0 * tau * v;
        };
        total += quad::adaptive_simpson<double>(f, 0.0, 1.0, opt).value;
    }
    return total;
}

double N_delta_eps_main(double delta, double eps, Complex xi) {
    return (2.0 / pi) * std::atan(std::sqrt((delta - 1.0) / 2.0)) / eps - std::log(std::abs(1.0 - xi)) / (2.0 * pi);
}

AdmissibleEps admissible_eps(double delta, double min_c) {
    if (!(delta > 1.0)) throw DomainError("admissible_eps needs delta > 1");
    if (!(min_c > 0.0)) throw DomainError("admissible_eps needs min_c > 0");
    const double k = expansion(delta);
    const double ep = min_c / std::sqrt(k);
    return {ep, ep / k};
}

CuspBoundReport extend_bounds(const BoundReport& base, const CuspGeometry& geom, CuspCase which) {
    geom.check();
    if (!(base.A <= base.B)) throw ConstraintError("A <= B", "base A = " + fmt(base.A) + ", B = " + fmt(base.B));
    CuspBoundReport r{which, base.A, base.B, "", std::nullopt, std::nullopt};
    switch (which) {
        case CuspCase::a:
            r.offset_terms = "gr(z,w) - (1/vol) log(eps y_c(z))";
            break;
        case CuspCase::a_prime:
            r.offset_terms = "gr(z,w) - (1/vol) log(eps y_c(w))";
            break;
        case CuspCase::b:
            r.offset_terms = "gr(z,w) - (1/vol) log(eps_c y_c(z)) - (1/vol) log(eps_c y_c(w))";
            break;
        case CuspCase::c: {
            const double main = arctan_term(geom.delta) / geom.eps_prime;
            const double err = geom.eps_prime * r_delta(geom.delta);
            r.A_tilde = base.A + geom.count_pm1 * (main - err);
            r.B_tilde = base.B + geom.count_pm1 * (main + err);
            r.offset_terms = "gr(z,w) - " + std::to_string(geom.count_pm1) +
                             " (1/(2 pi)) log|q_c(z) - q_c(w)| - (1/vol) log(eps' y_c(z)) - (1/vol) log(eps' y_c(w))";
            break;
        }
    }
    return r;
}

std::optional<UnimodularMatrix> separation_counterexample(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                                          double delta) {
    for (const auto& [g, u] : matrices_within(z, w, delta))
        if (u < delta && g.c() != 0) return g;
    return std::nullopt;
}

double min_u_over_group(const UpperHalfPoint& z, const UpperHalfPoint& w) {
    for (double U = 2.0;; U *= 2.0) {
        const auto found = matrices_within(z, w, U);
        if (found.empty()) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& m : found) best = std::min(best, m.second);
        return best;
    }
}

SeparationCheckReport check_cusp_separation(double delta, double eps, double eps_prime, int samples, std::uint64_t seed) {
    CuspGeometry{eps, eps_prime, delta, 1.0, 2}.check();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SeparationCheckReport rep;
    auto note = [&](const std::string& s) {
        if (rep.first_counterexample.empty()) rep.first_counterexample = s;
    };

    // (a): both points above height 1/eps'
    for (int k = 0; k < samples; ++k) {
        const UpperHalfPoint z(4.0 * unit(rng) - 2.0, (1.0 + 3.0 * unit(rng)) / eps_prime);
        const UpperHalfPoint w(4.0 * unit(rng) - 2.0, (1.0 + 3.0 * unit(rng)) / eps_prime);
        ++rep.configurations;
        if (const auto g = separation_counterexample(z, w, delta)) {
            ++rep.part_a_violations;
            note("(a) z=" + fmt(z.x()) + "+" + fmt(z.y()) + "i w=" + fmt(w.x()) + "+" + fmt(w.y()) +
                 "i c=" + std::to_string(g->c()));
        }
    }

    // (b): z above 1/eps, w in the orbit of a reduced point of height <= 1/eps'
    const double top = 1.0 / eps_prime;
    const double floor_y = std::sqrt(3.0) / 2.0;
    if (top > floor_y) {
        const UnimodularMatrix moves[] = {{0, -1, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 1}, {1, 0, 3, 1}, {5, 2, 2, 1}};
        for (int k = 0; k < samples; ++k) {
            const UpperHalfPoint z(2.0 * unit(rng) - 1.0, (1.0 + 3.0 * unit(rng)) / eps);
            const double x = unit(rng) - 0.5;
            const double ylo = std::max(floor_y, std::sqrt(1.0 - x * x));
            const UpperHalfPoint w0(x, ylo + (top - ylo) * unit(rng));
            const UpperHalfPoint w = mobius_apply(moves[k % 5], w0);
            ++rep.configurations;
            if (reduce_to_fundamental_domain(w).y() > top * (1.0 + 1e-9)) continue;
            const double m = min_u_over_group(z, w);
            if (m < delta) {
                ++rep.part_b_violations;
                note("(b) z=" + fmt(z.x()) + "+" + fmt(z.y()) + "i w=" + fmt(w.x()) + "+" + fmt(w.y()) +
                     "i min u=" + fmt(m));
            }
        }
    }
    return rep;
}

}  // namespace greenbound
