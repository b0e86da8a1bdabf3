#pragma once

#include <complex>
#include <utility>

namespace greenbound {

using Complex = std::complex<double>;

/// Strip parameter sigma in (0, 1/2) describing sigma <= Re s <= 1 - sigma.
class StripParameter {
public:
    explicit StripParameter(double sigma);
    double sigma() const noexcept { return sigma_; }

private:
    double sigma_;
};

/// log Gamma(z) on the continuous branch (imaginary part is not reduced mod 2 pi).
/// Stirling series after shifting to Re z >= 10, reflection for Re z < 1/2.
/// Throws DomainError at z = 0, -1, -2, ...
Complex log_gamma_complex(Complex z);

/// 1 / Gamma(z); entire, exactly zero at the nonpositive integers.
Complex reciprocal_gamma(Complex z);

/// Gauss series 2F1(a, b; c; z) for real |z| < 1.
/// Throws DomainError for |z| >= 1 or c in {0, -1, ...}, ConvergenceError after 10^6 terms.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

/// 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
/// Requires Re c > 0 and Re(c - a - b) > 0.
Complex gauss_value(Complex a, Complex b, Complex c);

/// P^{-1}_{s-1}(u) = sqrt((u-1)/(u+1)) F(s, 1-s; 2; (1-u)/2), for 1 < u < 3 only.
Complex legendre_P_neg1(Complex s, double u);

/// Q_0(u) = log((u+1)/(u-1)) / 2.
double legendre_Q0(double u);

/// Derivative in u of the Legendre function of the second kind Q_nu, nu >= 0, u > 1.
double legendre_Q_deriv(double nu, double u);

/// P^{-m}_{s-1}(u) for even m >= 0 and u > 1, from the expansion in powers of
/// x^{-2}, x = u + sqrt(u^2 - 1). Points within 1e-3 of s = 1/2 are rejected.
/// Near u = 1 (u < 3 and |s(1-s)| (u-1)/2 <= 4) the hypergeometric form around u = 1 is used instead.
Complex legendre_P_negm(int m, Complex s, double u);

/// The two routes of legendre_P_negm, exposed for cross-checks.
Complex legendre_P_negm_x_series(int m, Complex s, double u);
Complex legendre_P_negm_near_one(int m, Complex s, double u);

struct SigmaConstants {
    double C;        // C_sigma
    double C_prime;  // C'_sigma
};

SigmaConstants C_sigma(StripParameter sigma);

/// p_sigma(u) = (C x^{2-sigma} + C' x^{1+sigma}) / (4 sqrt(pi)) * ((1 - x^-2)^{3/2} + 3 x^-2).
double p_sigma(StripParameter sigma, double u);

/// log p_sigma expressed through log x; usable far beyond the range of double u.
double log_p_sigma_from_log_x(StripParameter sigma, double log_x);

struct GammaRatioBounds {
    double lower;
    double upper;
};

/// Two-sided bound on |Gamma(a+iy) / Gamma(b+iy)| for b >= a > 0.
GammaRatioBounds gamma_ratio_bounds(double a, double b, double y);

/// Weakened upper bound exp(b - a + (1/a - 1/b)/12) (a^2 + y^2)^{-(b-a)/2}; needs b >= a > 0, b >= 1/2.
double gamma_ratio_upper(double a, double b, double y);

}  // namespace greenbound
