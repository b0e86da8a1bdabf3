#include "greenbound/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "greenbound/constants.hpp"
#include "greenbound/error.hpp"

namespace greenbound {

namespace {

constexpr double pi = std::numbers::pi;

void require(bool ok, const char* name, const std::string& detail) {
    if (!ok) throw ConstraintError(name, detail);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

GroupContext GroupContext::sl2z() { return {constants::vol_sl2z, constants::eta_kim_sarnak, true, 1.0}; }

void GroupContext::check() const {
    require(vol > 0.0 && std::isfinite(vol), "vol > 0", "vol = " + fmt(vol));
    require(eta > 0.0 && eta <= 0.25, "0 < eta <= 1/4", "eta = " + fmt(eta));
    require(min_c > 0.0, "min_c > 0", "min_c = " + fmt(min_c));
}

ParamSet ParamSet::reference() {
    return {{constants::ref_delta, constants::ref_alpha_plus, constants::ref_alpha_minus, constants::ref_beta_plus,
             constants::ref_beta_minus},
            constants::ref_sigma_plus,
            constants::ref_sigma_minus};
}

const char* to_string(ArithmeticMode m) {
    return m == ArithmeticMode::theorem_exact ? "theorem-exact" : "paper-arithmetic";
}

ArithmeticMode arithmetic_mode_from_string(const std::string& s) {
    if (s == "exact" || s == "theorem-exact") return ArithmeticMode::theorem_exact;
    if (s == "paper" || s == "paper-arithmetic") return ArithmeticMode::paper_arithmetic;
    throw ConstraintError("mode", "unknown arithmetic mode '" + s + "'");
}

ParamSet validate(const ParamSet& params, const GroupContext& ctx) {
    ctx.check();
    const auto& t = params.trapezoid;
    require(t.delta > 1.0 && std::isfinite(t.delta), "delta > 1", "delta = " + fmt(t.delta));
    require(t.alpha_plus > 0.0 && t.alpha_plus < 0.5, "0 < alpha+ < 1/2", "alpha+ = " + fmt(t.alpha_plus));
    require(t.alpha_minus > 0.0 && t.alpha_minus < 0.5, "0 < alpha- < 1/2", "alpha- = " + fmt(t.alpha_minus));
    require(t.beta_plus > 0.0 && std::isfinite(t.beta_plus), "beta+ > 0", "beta+ = " + fmt(t.beta_plus));
    require(t.beta_minus > 0.0, "beta- > 0", "beta- = " + fmt(t.beta_minus));
    require(t.beta_minus <= t.beta_minus_critical(), "beta- <= delta^(1+alpha-)/(delta+1)",
            "beta- = " + fmt(t.beta_minus) + " exceeds " + fmt(t.beta_minus_critical()));
    require(params.sigma_plus > t.alpha_plus && params.sigma_plus < 0.5, "alpha+ < sigma+ < 1/2",
            "sigma+ = " + fmt(params.sigma_plus));
    require(params.sigma_minus > t.alpha_minus && params.sigma_minus < 0.5, "alpha- < sigma- < 1/2",
            "sigma- = " + fmt(params.sigma_minus));
    require(params.sigma_plus * (1.0 - params.sigma_plus) <= ctx.eta, "sigma+(1-sigma+) <= eta",
            fmt(params.sigma_plus * (1.0 - params.sigma_plus)) + " > " + fmt(ctx.eta));
    require(params.sigma_minus * (1.0 - params.sigma_minus) <= ctx.eta, "sigma-(1-sigma-) <= eta",
            fmt(params.sigma_minus * (1.0 - params.sigma_minus)) + " > " + fmt(ctx.eta));
    return params;
}

PlusMinus compute_q(const ParamSet& params, const GroupContext& ctx) {
    const auto& t = params.trapezoid;
    const double lg = std::log((t.delta + 1.0) / 2.0);
    const double plus = (t.beta_plus / (2.0 * t.alpha_plus * std::pow(t.delta, t.alpha_plus)) - lg) / ctx.vol;
    const double minus = -(t.beta_minus / (2.0 * t.alpha_minus * std::pow(t.delta, t.alpha_minus)) + lg) / ctx.vol;
    return {plus, minus};
}

PlusMinus compute_D(const ParamSet& params, double rel_tol) {
    const auto& t = params.trapezoid;
    return {D_integral(t, Sign::plus, StripParameter(params.sigma_plus), rel_tol).value,
            D_integral(t, Sign::minus, StripParameter(params.sigma_minus), rel_tol).value};
}

double spectral_factor(double eta, bool include_phi_constant) {
    if (!(eta > 0.0 && eta <= 0.25)) throw ConstraintError("0 < eta <= 1/4", "eta = " + fmt(eta));
    const double f = std::pow(eta, -1.25) / 4.0 + 4.0 * std::sqrt(2.0);
    return include_phi_constant ? f * pi / ((2.0 * pi - 4.0) * (2.0 * pi - 4.0)) : f;
}

BoundReport assemble_from(PlusMinus q, PlusMinus D, double eta, double N_bar, ArithmeticMode mode) {
    require(N_bar >= 2.0, "N_bar >= 2", "N_bar = " + fmt(N_bar));
    const double F = spectral_factor(eta, mode == ArithmeticMode::theorem_exact);
    return {q.plus, q.minus, D.plus, D.minus, N_bar, F, -q.plus - D.plus * F * N_bar, -q.minus + D.minus * F * N_bar,
            mode};
}

BoundReport assemble(const ParamSet& params, const GroupContext& ctx, double N_bar, ArithmeticMode mode) {
    require(N_bar >= 2.0, "N_bar >= 2", "N_bar = " + fmt(N_bar));
    if (mode == ArithmeticMode::paper_arithmetic) {
        ctx.check();
        return assemble_from({constants::ref_q_plus_cap, constants::ref_q_minus_cap},
                             {constants::ref_D_plus_cap, constants::ref_D_minus_cap}, ctx.eta, N_bar, mode);
    }
    const ParamSet p = validate(params, ctx);
    return assemble_from(compute_q(p, ctx), compute_D(p), ctx.eta, N_bar, mode);
}

std::vector<std::pair<std::string, double>> eta_presets() {
    return {{"selberg-3-16", constants::eta_selberg}, {"kim-sarnak", constants::eta_kim_sarnak}};
}

double eta_preset(const std::string& name) {
    for (const auto& [n, v] : eta_presets())
        if (n == name) return v;
    throw ConstraintError("eta preset", "unknown eta preset '" + name + "'");
}

}  // namespace greenbound
