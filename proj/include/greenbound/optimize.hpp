#pragma once

#include <functional>
#include <string>

#include "greenbound/bounds.hpp"

namespace greenbound {

enum class Objective { width, max_abs };

const char* to_string(Objective o);
Objective objective_from_string(const std::string& s);

struct SearchConfig {
    Objective objective = Objective::width;
    int max_iters = 100;
    double step_shrink = 0.7;
    ParamSet seed_params = ParamSet::reference();
    double initial_step = 1.3;
    double min_step = 1e-3;
};

struct SearchResult {
    ParamSet params;
    BoundReport report;
    double objective;
    double seed_objective;
    int iterations;
    int evaluations;
};

/// B - A or max(|A|, |B|).
double objective_value(Objective o, const BoundReport& r);

/// Coordinate descent over (alpha+, beta+, sigma+, alpha-, beta-, sigma-) with multiplicative steps.
/// The seed's delta is replaced by `delta`; an invalid seed throws ConstraintError.
/// `observer` sees every evaluated parameter set with its objective.
SearchResult search(const SearchConfig& cfg, const GroupContext& ctx, double delta, double N_bar,
                    const std::function<void(const ParamSet&, double)>& observer = {});

}  // namespace greenbound
