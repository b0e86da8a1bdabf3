#pragma once

#include <cstddef>

#include "greenbound/specfun.hpp"

namespace greenbound {

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

/// Shape parameters of the trapezoid kernels g_U^+ and g_U^-.
struct TrapezoidParams {
    double delta;
    double alpha_plus;
    double alpha_minus;
    double beta_plus;
    double beta_minus;

    double alpha(Sign s) const noexcept { return s == Sign::plus ? alpha_plus : alpha_minus; }
    double beta(Sign s) const noexcept { return s == Sign::plus ? beta_plus : beta_minus; }

    /// delta^{1+alpha-} / (delta + 1), the largest beta- keeping T(U) >= 1.
    double beta_minus_critical() const;

    friend bool operator==(const TrapezoidParams&, const TrapezoidParams&) = default;
};

/// T(U) = U - beta- U^{-1-alpha-} (U^2 - 1), for U >= delta.
double T_of_U(const TrapezoidParams& p, double U);

/// V(U) = U + beta+ U^{-1-alpha+} (U^2 - 1), for U >= 1.
double V_of_U(const TrapezoidParams& p, double U);

/// Trapezoid kernels as functions of u: g^+ falls linearly from 1 at U to 0 at V,
/// g^- from 1 at T to 0 at U.
double g_U_pm(const TrapezoidParams& p, Sign sign, double U, double u);

/// Transform of the indicator of u <= U: 2 pi sqrt(U^2 - 1) P^{-1}_{s-1}(U), 1 < U < 3.
Complex h_U(Complex s, double U);

/// Transforms of the trapezoid kernels, through differences of (u^2 - 1) P^{-2}_{s-1}(u).
Complex h_U_pm(const TrapezoidParams& p, Sign sign, Complex s, double U);

/// 1 / (s(1-s) + a(a-1)); throws DomainError at s = a and s = 1 - a.
Complex h_a(double a, Complex s);

/// (b(b-1) - a(a-1)) / ((a-s)(a-1+s)(b-s)(b+1-s)), with the last factor exactly as displayed
/// in the published identity for h_a - h_b. Kept for comparison; see the tests.
Complex h_a_difference_displayed(double a, double b, Complex s);

/// c_a = 1 / (vol a (a-1)).
double c_a(double a, double vol);

/// g_1(u) = Q_0(u) / (2 pi), which coincides with L(u).
double g_1(double u);

/// Integral over [delta, inf) computed in t = log U up to a cutoff M,
/// with an analytic bound for the part beyond M.
template <class T>
struct TailedIntegral {
    T value{};
    double error_estimate = 0.0;  // quadrature error + tail bound
    double tail_bound = 0.0;
    double log_cutoff = 0.0;      // log M
    std::size_t evaluations = 0;
};

/// log of (p_sigma(W) + p_sigma(U)) U^{2+alpha} / (beta (U^2 - 1)^2) at U = e^t, W = V or T.
/// This is the integrand of D^{+-} after the substitution U = e^t.
double log_D_integrand(const TrapezoidParams& p, Sign sign, StripParameter sigma, double t);

/// Upper bound for the D integrand integral over [M, inf), M = e^{log_M}; needs alpha < sigma.
double D_tail_bound(const TrapezoidParams& p, Sign sign, StripParameter sigma, double log_M);

/// D^{+-}_delta by adaptive Simpson in log U; value includes the tail bound, so it is an upper estimate.
TailedIntegral<double> D_integral(const TrapezoidParams& p, Sign sign, StripParameter sigma,
                                  double rel_tol = 1e-10);

/// I^{+-}_delta(s) = (1/2pi) int_delta^inf h_U^{+-}(s) / (U^2 - 1) dU for s in the strip of sigma.
/// The tail beyond the cutoff is bounded by |s(1-s)|^{-5/4} times the D tail.
TailedIntegral<Complex> I_delta_pm(const TrapezoidParams& p, Sign sign, Complex s, StripParameter sigma,
                                   double rel_tol = 1e-8);

}  // namespace greenbound
