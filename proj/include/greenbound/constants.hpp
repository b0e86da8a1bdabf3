#pragma once

#include <numbers>

// Reference constants for the modular group SL2(Z) and the delta = 2 certificate.
// Every literal used by the presets, the paper-arithmetic mode and the
// reproduction report lives here.
namespace greenbound::constants {

inline constexpr double pi = std::numbers::pi;

// Hyperbolic volume of SL2(Z)\H under the stack convention: the Riemann
// surface area pi/3 divided by #(Gamma ∩ {±1}) = 2.
inline constexpr double vol_sl2z = pi / 6.0;

// Spectral gap lower bounds for congruence subgroups.
inline constexpr double eta_kim_sarnak = 975.0 / 4096.0;  // (25/64)(1 - 25/64)
inline constexpr double eta_selberg = 3.0 / 16.0;

// Lattice count region Y0 = [-1/2, 1/2] x [sqrt(3)/2, 2] and its radius parameter.
inline constexpr double y0_x_min = -0.5;
inline constexpr double y0_x_max = 0.5;
inline constexpr double y0_y_min = 0.8660254037844386;  // sqrt(3)/2
inline constexpr double y0_y_max = 2.0;
inline constexpr double count_radius_U = 17.0;
inline constexpr int count_grid = 100;

// Published sup of N(z, z, 17) over Y0.
inline constexpr double reference_count_bound = 216.0;

// Reference parameter set for delta = 2.
inline constexpr double ref_delta = 2.0;
inline constexpr double ref_alpha_plus = 0.0366;
inline constexpr double ref_beta_plus = 2.72;
inline constexpr double ref_sigma_plus = 0.306;
inline constexpr double ref_alpha_minus = 2.96e-3;
inline constexpr double ref_beta_minus = 0.668;
inline constexpr double ref_sigma_minus = 0.250;

// Published caps for the constants of the reference parameter set.
inline constexpr double ref_q_plus_cap = 69.0;     // q+ < 69.0
inline constexpr double ref_q_minus_cap = -216.0;  // q- > -216
inline constexpr double ref_D_plus_cap = 18.5;     // D+ < 18.5
inline constexpr double ref_D_minus_cap = 9.61;    // D- < 9.61

// Published headline certificate.
inline constexpr double ref_headline_A = -2.87e4;
inline constexpr double ref_headline_B = 1.51e4;

}  // namespace greenbound::constants
