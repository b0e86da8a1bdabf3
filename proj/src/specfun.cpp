#include "greenbound/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log sin(w) without overflow for large |Im w|.
Complex log_sin(Complex w) {
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    if (w.imag() > 0.0) return -I * w - std::log(-2.0 * I) + std::log(1.0 - std::exp(2.0 * I * w));
    return I * w - std::log(2.0 * I) + std::log(1.0 - std::exp(-2.0 * I * w));
}

Complex log_cos(Complex w) { return log_sin(w + pi / 2.0); }

// B_{2k} / (2k (2k - 1)), k = 1..10
constexpr std::array<double, 10> stirling_coeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

Complex log_gamma_stirling(Complex z) {
    Complex shift{0.0, 0.0};
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex series{0.0, 0.0};
    Complex pw = zinv;
    for (double ck : stirling_coeffs) {
        series += ck * pw;
        pw *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

}  // namespace

StripParameter::StripParameter(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0 && sigma < 0.5)) throw DomainError("strip parameter sigma must lie in (0, 1/2)");
}

Complex log_gamma_complex(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw DomainError("log_gamma: pole at a nonpositive integer");
    if (z.real() < 0.5) return std::log(pi) - log_sin(pi * z) - log_gamma_stirling(1.0 - z);
    return log_gamma_stirling(z);
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma_complex(z));
}

Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1: series needs |z| < 1");
    if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a nonpositive integer");
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    int small_run = 0;
    for (int n = 0; n < 1'000'000; ++n) {
        const double dn = n;
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        if (term == Complex{0.0, 0.0}) return sum;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small_run >= 3 && n > 10) return sum;
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("hyp2f1: no convergence after 10^6 terms");
}

Complex gauss_value(Complex a, Complex b, Complex c) {
    const Complex e = c - a - b;
    if (!(c.real() > 0.0) || !(e.real() > 0.0)) throw DomainError("gauss_value needs Re c > 0 and Re(c-a-b) > 0");
    if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) return {0.0, 0.0};
    return std::exp(log_gamma_complex(c) + log_gamma_complex(e) - log_gamma_complex(c - a) -
                    log_gamma_complex(c - b));
}

Complex legendre_P_neg1(Complex s, double u) {
    if (!(u > 1.0 && u < 3.0)) throw DomainError("legendre_P_neg1: needs 1 < u < 3");
    return std::sqrt((u - 1.0) / (u + 1.0)) * hyp2f1(s, 1.0 - s, 2.0, (1.0 - u) / 2.0);
}

double legendre_Q0(double u) {
    if (!(u > 1.0)) throw DomainError("legendre_Q0: needs u > 1");
    return 0.5 * std::log1p(2.0 / (u - 1.0));
}

double legendre_Q_deriv(double nu, double u) {
    if (!(nu >= 0.0)) throw DomainError("legendre_Q_deriv: needs nu >= 0");
    if (!(u > 1.0)) throw DomainError("legendre_Q_deriv: needs u > 1");
    const double z = 2.0 / (u + 1.0);
    const double lg = std::lgamma(1.0 + nu) + std::lgamma(2.0 + nu) - std::lgamma(2.0 + 2.0 * nu);
    const double f = hyp2f1(nu, 1.0 + nu, 2.0 + 2.0 * nu, z).real();
    return -std::exp(nu * std::log(z) + lg) / ((u - 1.0) * (u + 1.0)) * f;
}

namespace {

void check_order(int m) {
    if (m < 0 || m % 2 != 0) throw DomainError("legendre_P_negm: m must be an even nonnegative integer");
}

}  // namespace

Complex legendre_P_negm_near_one(int m, Complex s, double u) {
    check_order(m);
    if (!(u > 1.0 && u < 3.0)) throw DomainError("legendre_P_negm_near_one: needs 1 < u < 3");
    const double pref = std::pow((u - 1.0) / (u + 1.0), 0.5 * m) / std::tgamma(1.0 + m);
    return pref * hyp2f1(1.0 - s, s, 1.0 + m, (1.0 - u) / 2.0);
}

// tan(pi s) Gamma(n-m+s) and tan(pi s) Gamma(n-m+1-s) rewritten by reflection so that
// the coefficients stay finite at integer s:
//   A_n = pi (-1)^n / (cos(pi s) Gamma(1+m-n-s) Gamma(n+1/2+s))
//   B_n = pi (-1)^n / (cos(pi s) Gamma(m-n+s) Gamma(n+3/2-s))
Complex legendre_P_negm_x_series(int m, Complex s, double u) {
    check_order(m);
    if (!(u > 1.0) || !std::isfinite(u)) throw DomainError("legendre_P_negm: needs u > 1");
    if (std::abs(s.imag()) < 1e-3 && std::abs(s.real() - 0.5) < 1e-3)
        throw DomainError("legendre_P_negm: s too close to 1/2");

    const double lx = std::acosh(u);
    const double q = std::exp(-2.0 * lx);
    const double dm = m;
    const Complex log_common = std::log(pi) - log_cos(pi * s);

    Complex A{0.0, 0.0}, B{0.0, 0.0};
    if (!is_nonpositive_integer(1.0 + dm - s) && !is_nonpositive_integer(0.5 + s))
        A = std::exp(log_common - log_gamma_complex(1.0 + dm - s) - log_gamma_complex(0.5 + s));
    if (!is_nonpositive_integer(dm + s) && !is_nonpositive_integer(1.5 - s))
        B = std::exp(log_common - log_gamma_complex(dm + s) - log_gamma_complex(1.5 - s));

    Complex xa = std::exp((dm - s) * lx);
    Complex xb = std::exp((dm - 1.0 + s) * lx);
    double c = 1.0;
    Complex sum{0.0, 0.0};
    for (int n = 0; n < 1'000'000; ++n) {
        const double dn = n;
        const Complex term = c * (A * xa - B * xb);
        sum += term;
        if (n > m + 1) {
            if (A == Complex{0.0, 0.0} && B == Complex{0.0, 0.0}) break;
            if (std::abs(term) * q / (1.0 - q) <= 1e-15 * std::abs(sum)) break;
        }
        c *= (dn + 0.5 - dm) / (dn + 1.0);
        A *= (dn - dm + s) / (dn + 0.5 + s);
        B *= (dn - dm + 1.0 - s) / (dn + 1.5 - s);
        xa *= q;
        xb *= q;
        if (n + 1 == 1'000'000) throw ConvergenceError("legendre_P_negm: series did not converge");
    }
    const double two_r = 2.0 * std::sqrt((u - 1.0) * (u + 1.0));
    return sum / (std::sqrt(pi) * std::pow(two_r, m));
}

Complex legendre_P_negm(int m, Complex s, double u) {
    check_order(m);
    if (!(u > 1.0)) throw DomainError("legendre_P_negm: needs u > 1");
    if (std::abs(s.imag()) < 1e-3 && std::abs(s.real() - 0.5) < 1e-3)
        throw DomainError("legendre_P_negm: s too close to 1/2");
    // The hypergeometric form is cancellation-free while |s(1-s)| (u-1)/2 stays small;
    // the x-series cancels badly as u -> 1.
    if (u < 3.0 && std::abs(s * (1.0 - s)) * (u - 1.0) / 2.0 <= 4.0) return legendre_P_negm_near_one(m, s, u);
    return legendre_P_negm_x_series(m, s, u);
}

SigmaConstants C_sigma(StripParameter strip) {
    const double s = strip.sigma();
    const double f = std::max(1.0, std::tan(pi * s)) * std::pow(1.0 / s - 1.0, 0.25);
    return {f * std::exp(0.5 + 1.0 / (24.0 * s * (0.5 + s))),
            f * std::exp(0.5 + 1.0 / (24.0 * (1.0 - s) * (1.5 - s)))};
}

double p_sigma(StripParameter strip, double u) {
    if (!(u >= 1.0)) throw DomainError("p_sigma: needs u >= 1");
    const double s = strip.sigma();
    const auto [C, Cp] = C_sigma(strip);
    const double x = u + std::sqrt((u - 1.0) * (u + 1.0));
    const double xm2 = 1.0 / (x * x);
    return (C * std::pow(x, 2.0 - s) + Cp * std::pow(x, 1.0 + s)) / (4.0 * std::sqrt(pi)) *
           (std::pow(1.0 - xm2, 1.5) + 3.0 * xm2);
}

double log_p_sigma_from_log_x(StripParameter strip, double log_x) {
    if (!(log_x >= 0.0)) throw DomainError("log_p_sigma: needs log x >= 0");
    const double s = strip.sigma();
    const auto [C, Cp] = C_sigma(strip);
    const double xm2 = std::exp(-2.0 * log_x);
    const double one_minus = -std::expm1(-2.0 * log_x);
    return (2.0 - s) * log_x + std::log(C + Cp * std::exp((2.0 * s - 1.0) * log_x)) -
           std::log(4.0 * std::sqrt(pi)) + std::log(std::pow(one_minus, 1.5) + 3.0 * xm2);
}

GammaRatioBounds gamma_ratio_bounds(double a, double b, double y) {
    if (!(a > 0.0)) throw DomainError("gamma_ratio_bounds: needs a > 0");
    if (!(b >= a)) throw DomainError("gamma_ratio_bounds: needs b >= a");
    const double common =
        (a / 2.0 - 0.25) * std::log(a * a + y * y) - (b / 2.0 - 0.25) * std::log(b * b + y * y);
    const double k = (1.0 / a - 1.0 / b) / 12.0;
    return {std::exp(common - k), std::exp(b - a + k + common)};
}

double gamma_ratio_upper(double a, double b, double y) {
    if (!(a > 0.0)) throw DomainError("gamma_ratio_upper: needs a > 0");
    if (!(b >= a) || !(b >= 0.5)) throw DomainError("gamma_ratio_upper: needs b >= a and b >= 1/2");
    const double k = (1.0 / a - 1.0 / b) / 12.0;
    return std::exp(b - a + k - 0.5 * (b - a) * std::log(a * a + y * y));
}

}  // namespace greenbound
