#pragma once

#include <string>
#include <utility>
#include <vector>

#include "greenbound/transforms.hpp"

namespace greenbound {

/// Summary data of a cofinite group with a single cusp at infinity.
struct GroupContext {
    double vol;  // stack convention: area divided by #(Gamma ∩ {±1})
    double eta;  // the nonzero spectrum lies in [eta, inf)
    bool contains_minus_one;
    double min_c;  // min of C_c(gamma) over gamma outside the cusp stabilizer

    static GroupContext sl2z();

    /// Throws ConstraintError if vol <= 0, eta outside (0, 1/4] or min_c <= 0.
    void check() const;

    friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

struct ParamSet {
    TrapezoidParams trapezoid;
    double sigma_plus;
    double sigma_minus;

    double sigma(Sign s) const noexcept { return s == Sign::plus ? sigma_plus : sigma_minus; }

    /// The delta = 2 parameter set used for SL2(Z).
    static ParamSet reference();

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

enum class ArithmeticMode { theorem_exact, paper_arithmetic };

const char* to_string(ArithmeticMode m);
ArithmeticMode arithmetic_mode_from_string(const std::string& s);

struct BoundReport {
    double q_plus;
    double q_minus;
    double D_plus;
    double D_minus;
    double N_bar;
    double spectral_factor;
    double A;
    double B;
    ArithmeticMode mode;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct PlusMinus {
    double plus;
    double minus;
};

/// Returns params unchanged if every hypothesis holds; otherwise throws ConstraintError
/// naming the first violated inequality.
ParamSet validate(const ParamSet& params, const GroupContext& ctx);

/// q^+ = (beta+/(2 alpha+ delta^alpha+) - log((delta+1)/2)) / vol,
/// q^- = -(beta-/(2 alpha- delta^alpha-) + log((delta+1)/2)) / vol.
PlusMinus compute_q(const ParamSet& params, const GroupContext& ctx);

/// D^+ and D^-, each including its analytic tail bound.
PlusMinus compute_D(const ParamSet& params, double rel_tol = 1e-10);

/// eta^{-5/4}/4 + 4 sqrt 2, times pi/(2 pi - 4)^2 when include_phi_constant.
double spectral_factor(double eta, bool include_phi_constant);

/// A = -q+ - D+ F N, B = -q- + D- F N with F = spectral_factor(eta, include_phi_constant).
BoundReport assemble_from(PlusMinus q, PlusMinus D, double eta, double N_bar, ArithmeticMode mode);

/// theorem_exact: computed q and D with the pi/(2 pi - 4)^2 factor.
/// paper_arithmetic: the published caps for q and D, factor omitted.
BoundReport assemble(const ParamSet& params, const GroupContext& ctx, double N_bar, ArithmeticMode mode);

std::vector<std::pair<std::string, double>> eta_presets();

/// Throws ConstraintError for unknown names.
double eta_preset(const std::string& name);

}  // namespace greenbound
