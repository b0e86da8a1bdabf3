#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "greenbound/bounds.hpp"
#include "greenbound/geom.hpp"

namespace greenbound {

/// Cusp neighbourhood radii for the single cusp at infinity.
struct CuspGeometry {
    double eps;
    double eps_prime;
    double delta;
    double min_c;
    int count_pm1;  // #(Gamma ∩ {±1})

    /// Throws ConstraintError unless eps' (delta + sqrt(delta^2-1))^{1/2} <= min_c and
    /// (delta + sqrt(delta^2-1)) eps <= eps' (plus the basic sign conditions).
    void check() const;

    friend bool operator==(const CuspGeometry&, const CuspGeometry&) = default;
};

enum class CuspCase { a, a_prime, b, c };

const char* to_string(CuspCase c);
CuspCase cusp_case_from_string(const std::string& s);

struct CuspBoundReport {
    CuspCase cusp_case;
    double base_A;
    double base_B;
    std::string offset_terms;
    std::optional<double> A_tilde;  // case c only
    std::optional<double> B_tilde;

    friend bool operator==(const CuspBoundReport&, const CuspBoundReport&) = default;
};

struct AdmissibleEps {
    double eps_prime_max;
    double eps_max;
};

/// (sqrt(2/(delta-1)) + arctan sqrt((delta-1)/2)) / (24 pi).
double r_delta(double delta);

/// (1 - |zeta|^2) / |1 - zeta|^2 for |zeta| < 1.
double poisson_kernel(Complex zeta);

/// (1/(2 pi i)) (log(1 - e^{-2 pi i t} xi) - log(1 - e^{2 pi i t} xi)), principal branches.
/// Real when xi is real.
Complex lambda_xi(Complex xi, double t);

struct LambdaIntegralCheck {
    double lhs;
    double bound;
};

/// lhs = |int_0^t lambda(xi, y)/y dy + log(1 - xi)/2|, bound = 1/(12 t).
LambdaIntegralCheck lambda_integral_check(double xi, double t);

/// int_{-tau}^{tau} J_delta(1 + (eps t)^2/2) P(e^{2 pi i t} xi) dt with tau = sqrt(2 delta - 2)/eps.
double N_delta_eps(double delta, double eps, Complex xi);

/// Leading part (2/pi) arctan(sqrt((delta-1)/2)) / eps - log|1 - xi| / (2 pi) of N_delta_eps.
double N_delta_eps_main(double delta, double eps, Complex xi);

AdmissibleEps admissible_eps(double delta, double min_c);

/// Cases a, a', b leave A and B unchanged and describe the logarithmic offsets;
/// case c shifts them by count_pm1 [(1 - (2/pi) arctan sqrt((delta-1)/2))/eps' -+ eps' r_delta].
CuspBoundReport extend_bounds(const BoundReport& base, const CuspGeometry& geom, CuspCase which);

/// A gamma with c != 0 and u(z, gamma w) < delta, if any (SL2(Z), cusp at infinity).
std::optional<UnimodularMatrix> separation_counterexample(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                                          double delta);

/// min over gamma in SL2(Z) of u(z, gamma w).
double min_u_over_group(const UpperHalfPoint& z, const UpperHalfPoint& w);

struct SeparationCheckReport {
    int configurations = 0;
    int part_a_violations = 0;
    int part_b_violations = 0;
    std::string first_counterexample;

    bool ok() const noexcept { return part_a_violations == 0 && part_b_violations == 0; }
};

/// Samples `samples` configurations for each part and verifies both implications of the
/// cusp separation lemma for SL2(Z). Throws ConstraintError if (eps, eps') is inadmissible.
SeparationCheckReport check_cusp_separation(double delta, double eps, double eps_prime, int samples, std::uint64_t seed = 1);

}  // namespace greenbound
