#include "greenbound/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "greenbound/error.hpp"
#include "greenbound/geom.hpp"
#include "greenbound/quadrature.hpp"

namespace greenbound {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double max_log_cutoff = 300.0;
constexpr double segment_width = 4.0;

double log_u2_minus_1(double t) {
    return t < 20.0 ? std::log(std::expm1(2.0 * t)) : 2.0 * t + std::log1p(-std::exp(-2.0 * t));
}

double log_add_exp(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

// (u^2 - 1) P^{-2}_{s-1}(u), zero at u = 1
Complex weighted_P2(Complex s, double u) {
    if (u <= 1.0) return {0.0, 0.0};
    return (u - 1.0) * (u + 1.0) * legendre_P_negm(2, s, u);
}

// Relative offset of V (plus) or T (minus) from U: W = U (1 + sign * rho)
double trapezoid_rho(const TrapezoidParams& p, Sign sign, double t) {
    return p.beta(sign) * std::exp(-p.alpha(sign) * t) * (-std::expm1(-2.0 * t));
}

void require_strip(const TrapezoidParams& p, Sign sign, StripParameter sigma) {
    if (!(p.alpha(sign) < sigma.sigma()))
        throw DomainError("tail bound needs alpha < sigma for the chosen sign");
    if (!(p.delta > 1.0)) throw DomainError("delta must exceed 1");
    if (!(p.beta(sign) > 0.0)) throw DomainError("beta must be positive");
}

// Integrates f over [log delta, log M] in segments, raising M until stop(value, tail) holds.
template <class T, class F, class Stop>
TailedIntegral<T> integrate_segments(F&& f, double t0, const quad::Options& opt, int panels_per_segment,
                                     const std::function<double(double)>& tail_at, Stop&& stop) {
    TailedIntegral<T> out;
    double a = t0;
    double abs_scale = 0.0;
    while (true) {
        const double b = a + segment_width;
        quad::Options seg = opt;
        seg.initial_panels = panels_per_segment;
        seg.abs_tol = opt.rel_tol * abs_scale;
        const auto r = quad::adaptive_simpson<T>(f, a, b, seg);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        abs_scale = std::max(abs_scale, std::abs(out.value));
        const double tail = tail_at(b);
        if (stop(out.value, tail)) {
            out.tail_bound = tail;
            out.log_cutoff = b;
            out.error_estimate += tail;
            return out;
        }
        a = b;
        if (a >= max_log_cutoff) throw ConvergenceError("tail bound did not reach tolerance before the cutoff cap");
    }
}

}  // namespace

double TrapezoidParams::beta_minus_critical() const {
    return std::pow(delta, 1.0 + alpha_minus) / (delta + 1.0);
}

double T_of_U(const TrapezoidParams& p, double U) {
    if (!(U >= p.delta)) throw DomainError("T_of_U needs U >= delta");
    return U - p.beta_minus * std::pow(U, -1.0 - p.alpha_minus) * (U * U - 1.0);
}

double V_of_U(const TrapezoidParams& p, double U) {
    if (!(U >= 1.0)) throw DomainError("V_of_U needs U >= 1");
    return U + p.beta_plus * std::pow(U, -1.0 - p.alpha_plus) * (U * U - 1.0);
}

double g_U_pm(const TrapezoidParams& p, Sign sign, double U, double u) {
    if (sign == Sign::plus) {
        const double V = V_of_U(p, U);
        if (u <= U) return 1.0;
        if (u >= V) return 0.0;
        return (V - u) / (V - U);
    }
    const double T = T_of_U(p, U);
    if (u <= T) return 1.0;
    if (u >= U) return 0.0;
    return (U - u) / (U - T);
}

Complex h_U(Complex s, double U) {
    if (!(U > 1.0 && U < 3.0)) throw DomainError("h_U needs 1 < U < 3");
    return 2.0 * pi * std::sqrt((U - 1.0) * (U + 1.0)) * legendre_P_neg1(s, U);
}

Complex h_U_pm(const TrapezoidParams& p, Sign sign, Complex s, double U) {
    if (!(U >= p.delta)) throw DomainError("h_U_pm needs U >= delta");
    if (sign == Sign::plus) {
        const double V = V_of_U(p, U);
        return 2.0 * pi * (weighted_P2(s, V) - weighted_P2(s, U)) / (V - U);
    }
    const double T = T_of_U(p, U);
    if (!(U - T >= 1e-300)) throw DomainError("h_U_pm: degenerate trapezoid U = T");
    return 2.0 * pi * (weighted_P2(s, U) - weighted_P2(s, T)) / (U - T);
}

Complex h_a(double a, Complex s) {
    if (!(a > 1.0)) throw DomainError("h_a needs a > 1");
    const Complex c = s - 0.5;
    const Complex lam = 0.25 - c * c;
    const Complex den = lam + a * (a - 1.0);
    if (std::abs(den) <= 1e-15 * (std::abs(lam) + a * (a - 1.0))) throw DomainError("h_a: pole at s = a or s = 1 - a");
    return 1.0 / den;
}

Complex h_a_difference_displayed(double a, double b, Complex s) {
    return (b * (b - 1.0) - a * (a - 1.0)) / ((a - s) * (a - 1.0 + s) * (b - s) * (b + 1.0 - s));
}

double c_a(double a, double vol) {
    if (!(a > 1.0)) throw DomainError("c_a needs a > 1");
    if (!(vol > 0.0)) throw DomainError("c_a needs vol > 0");
    return 1.0 / (vol * a * (a - 1.0));
}

double g_1(double u) { return legendre_Q0(u) / (2.0 * pi); }

double log_D_integrand(const TrapezoidParams& p, Sign sign, StripParameter sigma, double t) {
    const double rho = trapezoid_rho(p, sign, t);
    const double factor = sign == Sign::plus ? 1.0 + rho : 1.0 - rho;
    if (!(factor > 0.0)) throw DomainError("trapezoid endpoint T(U) is not positive");
    const double W = std::max(1.0, std::exp(t) * factor);
    const double lpW = log_p_sigma_from_log_x(sigma, std::acosh(W));
    const double lpU = log_p_sigma_from_log_x(sigma, std::acosh(std::exp(t)));
    return log_add_exp(lpW, lpU) + (2.0 + p.alpha(sign)) * t - std::log(p.beta(sign)) - 2.0 * log_u2_minus_1(t);
}

double D_tail_bound(const TrapezoidParams& p, Sign sign, StripParameter sigma, double log_M) {
    require_strip(p, sign, sigma);
    const double s = sigma.sigma();
    const double alpha = p.alpha(sign);
    const double beta = p.beta(sign);
    const auto [C, Cp] = C_sigma(sigma);
    const double inv_M2 = std::exp(-2.0 * log_M);
    const double gU = 1.0 + 3.0 * inv_M2;
    double gW, k;
    if (sign == Sign::plus) {
        gW = gU;
        k = 1.0 + beta * std::exp(-alpha * log_M);
    } else {
        gW = 3.0;
        k = 1.0;
    }
    const double K = (C + Cp) / (4.0 * std::sqrt(pi) * beta) * std::pow(2.0, 2.0 - s) *
                     (gU + gW * std::pow(k, 2.0 - s)) / ((1.0 - inv_M2) * (1.0 - inv_M2));
    return K * std::exp((alpha - s) * log_M) / (s - alpha);
}

TailedIntegral<double> D_integral(const TrapezoidParams& p, Sign sign, StripParameter sigma, double rel_tol) {
    require_strip(p, sign, sigma);
    auto f = [&](double t) { return std::exp(log_D_integrand(p, sign, sigma, t)); };
    quad::Options opt;
    opt.rel_tol = rel_tol;
    const std::function<double(double)> tail = [&](double lm) { return D_tail_bound(p, sign, sigma, lm); };
    auto out = integrate_segments<double>(f, std::log(p.delta), opt, 32, tail,
                                          [](double v, double tb) { return tb <= 1e-8 * v; });
    out.value += out.tail_bound;
    return out;
}

TailedIntegral<Complex> I_delta_pm(const TrapezoidParams& p, Sign sign, Complex s, StripParameter sigma,
                                   double rel_tol) {
    require_strip(p, sign, sigma);
    if (s.real() < sigma.sigma() || s.real() > 1.0 - sigma.sigma())
        throw DomainError("I_delta_pm: s lies outside the strip of sigma");
    const double lam_factor = std::pow(std::abs(s * (1.0 - s)), -1.25);
    auto f = [&](double t) -> Complex {
        const double U = std::exp(t);
        return h_U_pm(p, sign, s, U) / (4.0 * pi * std::sinh(t));
    };
    quad::Options opt;
    opt.rel_tol = rel_tol;
    const int panels = 32 + 16 * static_cast<int>(std::ceil(std::abs(s.imag())));
    // Scale for the stopping rule: the majorant integral accumulated alongside.
    double majorant = 0.0;
    double last_lm = std::log(p.delta);
    const std::function<double(double)> tail = [&](double lm) {
        majorant += quad::adaptive_simpson<double>(
                        [&](double t) { return std::exp(log_D_integrand(p, sign, sigma, t)); }, last_lm, lm)
                        .value;
        last_lm = lm;
        return lam_factor * D_tail_bound(p, sign, sigma, lm);
    };
    return integrate_segments<Complex>(f, std::log(p.delta), opt, panels, tail, [&](Complex v, double tb) {
        return tb <= 1e-8 * std::abs(v) || tb <= 1e-10 * lam_factor * majorant;
    });
}

}  // namespace greenbound
