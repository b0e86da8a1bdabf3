#include "greenbound/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

constexpr int n_coords = 6;

double& coord(ParamSet& p, int i) {
    switch (i) {
        case 0: return p.trapezoid.alpha_plus;
        case 1: return p.trapezoid.beta_plus;
        case 2: return p.sigma_plus;
        case 3: return p.trapezoid.alpha_minus;
        case 4: return p.trapezoid.beta_minus;
        default: return p.sigma_minus;
    }
}

double sigma_max(double eta) { return (1.0 - std::sqrt(1.0 - 4.0 * eta)) / 2.0 * (1.0 - 1e-12); }

void project(ParamSet& p, double eta) {
    auto& t = p.trapezoid;
    t.beta_minus = std::min(t.beta_minus, (1.0 - 1e-9) * t.beta_minus_critical());
    const double smax = sigma_max(eta);
    for (Sign s : {Sign::plus, Sign::minus}) {
        double& sigma = s == Sign::plus ? p.sigma_plus : p.sigma_minus;
        const double alpha = t.alpha(s);
        sigma = std::min(sigma, smax);
        if (sigma <= alpha) sigma = 0.5 * (alpha + smax);
    }
}

class Evaluator {
public:
    Evaluator(const GroupContext& ctx, double N_bar, Objective obj) : ctx_(ctx), N_bar_(N_bar), obj_(obj) {}

    // nullopt when the parameter set is invalid
    std::optional<std::pair<BoundReport, double>> operator()(const ParamSet& p) {
        try {
            validate(p, ctx_);
        } catch (const ConstraintError&) {
            return std::nullopt;
        }
        ++evaluations;
        const auto& t = p.trapezoid;
        const PlusMinus D{cached_D(t, Sign::plus, p.sigma_plus), cached_D(t, Sign::minus, p.sigma_minus)};
        const auto r = assemble_from(compute_q(p, ctx_), D, ctx_.eta, N_bar_, ArithmeticMode::theorem_exact);
        return std::make_pair(r, objective_value(obj_, r));
    }

    int evaluations = 0;

private:
    double cached_D(const TrapezoidParams& t, Sign s, double sigma) {
        char key[160];
        std::snprintf(key, sizeof key, "%d %.12e %.12e %.12e %.12e", s == Sign::plus ? 1 : 0, t.delta, t.alpha(s),
                      t.beta(s), sigma);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const double v = D_integral(t, s, StripParameter(sigma)).value;
        memo_.emplace(key, v);
        return v;
    }

    GroupContext ctx_;
    double N_bar_;
    Objective obj_;
    std::map<std::string, double> memo_;
};

}  // namespace

const char* to_string(Objective o) { return o == Objective::width ? "width" : "max-abs"; }

Objective objective_from_string(const std::string& s) {
    if (s == "width") return Objective::width;
    if (s == "max-abs" || s == "max_abs") return Objective::max_abs;
    throw ConstraintError("objective", "unknown objective '" + s + "'");
}

double objective_value(Objective o, const BoundReport& r) {
    return o == Objective::width ? r.B - r.A : std::max(std::abs(r.A), std::abs(r.B));
}

SearchResult search(const SearchConfig& cfg, const GroupContext& ctx, double delta, double N_bar,
                    const std::function<void(const ParamSet&, double)>& observer) {
    if (cfg.max_iters < 1) throw ConstraintError("max_iters >= 1", std::to_string(cfg.max_iters));
    if (!(cfg.step_shrink > 0.0 && cfg.step_shrink < 1.0))
        throw ConstraintError("0 < step_shrink < 1", std::to_string(cfg.step_shrink));
    if (!(cfg.initial_step > 1.0)) throw ConstraintError("initial_step > 1", std::to_string(cfg.initial_step));

    ParamSet best = cfg.seed_params;
    best.trapezoid.delta = delta;
    validate(best, ctx);

    Evaluator eval(ctx, N_bar, cfg.objective);
    auto first = eval(best);
    if (observer) observer(best, first->second);
    BoundReport best_report = first->first;
    double best_obj = first->second;
    const double seed_obj = best_obj;

    std::array<double, n_coords> step;
    step.fill(cfg.initial_step - 1.0);
    int iter = 1;
    for (; iter < cfg.max_iters; ++iter) {
        if (*std::max_element(step.begin(), step.end()) < cfg.min_step) break;
        for (int i = 0; i < n_coords; ++i) {
            if (step[i] < cfg.min_step) continue;
            std::optional<ParamSet> winner;
            BoundReport winner_report{};
            double winner_obj = best_obj;
            for (double factor : {1.0 + step[i], 1.0 / (1.0 + step[i])}) {
                ParamSet trial = best;
                coord(trial, i) *= factor;
                project(trial, ctx.eta);
                if (trial == best) continue;
                const auto r = eval(trial);
                if (!r) continue;
                if (observer) observer(trial, r->second);
                if (r->second < winner_obj) {
                    winner = trial;
                    winner_report = r->first;
                    winner_obj = r->second;
                }
            }
            if (winner) {
                best = *winner;
                best_report = winner_report;
                best_obj = winner_obj;
            } else {
                step[i] *= cfg.step_shrink;
            }
        }
    }
    return {best, best_report, best_obj, seed_obj, iter, eval.evaluations};
}

}  // namespace greenbound
