#include "greenbound/serialize.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConstraintError(where + k, "unknown key");
}

double number(const Json& j, const std::string& key, const std::string& where, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConstraintError(where + key, "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConstraintError(where + key, "must be finite");
    return d;
}

double required(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ConstraintError(where + key, "missing");
    return number(j, key, where, 0.0);
}

int integer(const Json& j, const std::string& key, const std::string& where, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) throw ConstraintError(where + key, "must be an integer");
    return j.at(key).get<int>();
}

std::string text(const Json& j, const std::string& key, const std::string& where, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string()) throw ConstraintError(where + key, "must be a string");
    return j.at(key).get<std::string>();
}

Rectangle y0_region() { return {constants::y0_x_min, constants::y0_x_max, constants::y0_y_min, constants::y0_y_max}; }

}  // namespace

void RunConfig::validate() const {
    group.check();
    greenbound::validate(params, group);
    if (!(U >= 1.0)) throw ConstraintError("U", "must be >= 1");
    if (nx < 1 || ny < 1) throw ConstraintError("grid", "both dimensions must be >= 1");
    if (!(N_bar >= 2.0)) throw ConstraintError("N_bar", "must be >= 2");
    if (cusp) {
        if (cusp->delta != params.trapezoid.delta) throw ConstraintError("cusp.delta", "must equal params.delta");
        cusp->check();
    }
    if (search.max_iters < 1) throw ConstraintError("search.max_iters", "must be >= 1");
    if (!(search.step_shrink > 0.0 && search.step_shrink < 1.0))
        throw ConstraintError("search.step_shrink", "must lie in (0, 1)");
}

Json to_json(const Rectangle& r) {
    return {{"x_min", r.x_min()}, {"x_max", r.x_max()}, {"y_min", r.y_min()}, {"y_max", r.y_max()}};
}

Json to_json(const ParamSet& p) {
    const auto& t = p.trapezoid;
    return {{"delta", t.delta},           {"alpha_plus", t.alpha_plus}, {"beta_plus", t.beta_plus},
            {"sigma_plus", p.sigma_plus}, {"alpha_minus", t.alpha_minus}, {"beta_minus", t.beta_minus},
            {"sigma_minus", p.sigma_minus}};
}

Json to_json(const GroupContext& g) {
    return {{"vol", g.vol}, {"eta", g.eta}, {"contains_minus_one", g.contains_minus_one}, {"min_c", g.min_c}};
}

Json to_json(const CuspGeometry& g) {
    return {{"eps", g.eps}, {"eps_prime", g.eps_prime}, {"delta", g.delta}, {"min_c", g.min_c},
            {"count_pm1", g.count_pm1}};
}

Json to_json(const RunConfig& c) {
    Json j{{"group_name", c.group_name},
           {"group", to_json(c.group)},
           {"params", to_json(c.params)},
           {"region", to_json(c.region)},
           {"U", c.U},
           {"grid", {c.nx, c.ny}},
           {"mode", to_string(c.mode)},
           {"N_bar", c.N_bar},
           {"search",
            {{"objective", to_string(c.search.objective)},
             {"max_iters", c.search.max_iters},
             {"step_shrink", c.search.step_shrink}}}};
    if (c.cusp) {
        Json cj = to_json(*c.cusp);
        cj["case"] = to_string(c.cusp_case);
        j["cusp"] = cj;
    }
    return j;
}

Json to_json(const CountCertificate& c) {
    return {{"region", to_json(c.region)}, {"U", c.U},         {"nx", c.nx},
            {"ny", c.ny},                  {"bound", c.bound}, {"per_cell_counts", c.per_cell_counts}};
}

Json to_json(const BoundReport& r) {
    return {{"q_plus", r.q_plus}, {"q_minus", r.q_minus}, {"D_plus", r.D_plus},
            {"D_minus", r.D_minus}, {"N_bar", r.N_bar},   {"spectral_factor", r.spectral_factor},
            {"A", r.A},           {"B", r.B},             {"mode", to_string(r.mode)}};
}

Json to_json(const CuspBoundReport& r) {
    Json j{{"case", to_string(r.cusp_case)},
           {"base_A", r.base_A},
           {"base_B", r.base_B},
           {"offset_terms", r.offset_terms},
           {"A_tilde", nullptr},
           {"B_tilde", nullptr}};
    if (r.A_tilde) j["A_tilde"] = *r.A_tilde;
    if (r.B_tilde) j["B_tilde"] = *r.B_tilde;
    return j;
}

Rectangle rectangle_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "y0") return y0_region();
        throw ConstraintError("region", "unknown region preset '" + j.get<std::string>() + "'");
    }
    if (!j.is_object()) throw ConstraintError("region", "must be an object or a preset name");
    reject_unknown(j, {"x_min", "x_max", "y_min", "y_max"}, "region.");
    const double x0 = required(j, "x_min", "region."), x1 = required(j, "x_max", "region.");
    const double y0 = required(j, "y_min", "region."), y1 = required(j, "y_max", "region.");
    if (!(y0 > 0.0)) throw ConstraintError("region.y_min", "must be > 0");
    if (!(y1 >= y0)) throw ConstraintError("region.y_max", "must be >= region.y_min");
    if (!(x1 >= x0)) throw ConstraintError("region.x_max", "must be >= region.x_min");
    return {x0, x1, y0, y1};
}

ParamSet param_set_from_json(const Json& j, ParamSet p) {
    if (!j.is_object()) throw ConstraintError("params", "must be an object");
    reject_unknown(j, {"delta", "alpha_plus", "beta_plus", "sigma_plus", "alpha_minus", "beta_minus", "sigma_minus"},
                   "params.");
    auto& t = p.trapezoid;
    t.delta = number(j, "delta", "params.", t.delta);
    t.alpha_plus = number(j, "alpha_plus", "params.", t.alpha_plus);
    t.beta_plus = number(j, "beta_plus", "params.", t.beta_plus);
    p.sigma_plus = number(j, "sigma_plus", "params.", p.sigma_plus);
    t.alpha_minus = number(j, "alpha_minus", "params.", t.alpha_minus);
    t.beta_minus = number(j, "beta_minus", "params.", t.beta_minus);
    p.sigma_minus = number(j, "sigma_minus", "params.", p.sigma_minus);
    return p;
}

GroupContext group_context_from_json(const Json& j, GroupContext g) {
    if (j.is_string()) {
        if (j.get<std::string>() == "sl2z") return GroupContext::sl2z();
        throw ConstraintError("group", "unknown group preset '" + j.get<std::string>() + "'");
    }
    if (!j.is_object()) throw ConstraintError("group", "must be an object or a preset name");
    reject_unknown(j, {"vol", "eta", "contains_minus_one", "min_c"}, "group.");
    g.vol = number(j, "vol", "group.", g.vol);
    g.eta = number(j, "eta", "group.", g.eta);
    g.min_c = number(j, "min_c", "group.", g.min_c);
    if (j.contains("contains_minus_one")) {
        if (!j.at("contains_minus_one").is_boolean())
            throw ConstraintError("group.contains_minus_one", "must be a boolean");
        g.contains_minus_one = j.at("contains_minus_one").get<bool>();
    }
    return g;
}

RunConfig run_config_from_json(const Json& j, RunConfig c) {
    if (!j.is_object()) throw ConstraintError("config", "top level must be an object");
    reject_unknown(j,
                   {"group_name", "group", "eta_preset", "params", "region", "U", "grid", "mode", "N_bar", "cusp",
                    "search"},
                   "");
    if (j.contains("group")) {
        c.group = group_context_from_json(j.at("group"), c.group);
        c.group_name = j.at("group").is_string() ? j.at("group").get<std::string>() : "custom";
    }
    if (j.contains("group_name")) c.group_name = text(j, "group_name", "", c.group_name);
    if (j.contains("eta_preset")) c.group.eta = eta_preset(text(j, "eta_preset", "", ""));
    if (j.contains("params")) c.params = param_set_from_json(j.at("params"), c.params);
    if (j.contains("region")) c.region = rectangle_from_json(j.at("region"));
    c.U = number(j, "U", "", c.U);
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer())
            throw ConstraintError("grid", "must be [nx, ny]");
        c.nx = g[0].get<int>();
        c.ny = g[1].get<int>();
    }
    if (j.contains("mode")) c.mode = arithmetic_mode_from_string(text(j, "mode", "", ""));
    c.N_bar = number(j, "N_bar", "", c.N_bar);
    if (j.contains("cusp")) {
        const auto& cj = j.at("cusp");
        if (!cj.is_object()) throw ConstraintError("cusp", "must be an object");
        reject_unknown(cj, {"eps", "eps_prime", "delta", "min_c", "count_pm1", "case"}, "cusp.");
        CuspGeometry g{required(cj, "eps", "cusp."), required(cj, "eps_prime", "cusp."),
                       number(cj, "delta", "cusp.", c.params.trapezoid.delta), number(cj, "min_c", "cusp.", c.group.min_c),
                       integer(cj, "count_pm1", "cusp.", c.group.contains_minus_one ? 2 : 1)};
        c.cusp = g;
        if (cj.contains("case")) c.cusp_case = cusp_case_from_string(text(cj, "case", "cusp.", "c"));
    }
    if (j.contains("search")) {
        const auto& sj = j.at("search");
        if (!sj.is_object()) throw ConstraintError("search", "must be an object");
        reject_unknown(sj, {"objective", "max_iters", "step_shrink"}, "search.");
        if (sj.contains("objective")) c.search.objective = objective_from_string(text(sj, "objective", "search.", ""));
        c.search.max_iters = integer(sj, "max_iters", "search.", c.search.max_iters);
        c.search.step_shrink = number(sj, "step_shrink", "search.", c.search.step_shrink);
    }
    c.search.seed_params = c.params;
    return c;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConstraintError("config", "cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConstraintError("config", std::string("malformed JSON: ") + e.what());
    }
    return run_config_from_json(j, std::move(base));
}

CountCertificate count_certificate_from_json(const Json& j) {
    return {rectangle_from_json(j.at("region")), j.at("U").get<double>(), j.at("nx").get<int>(),
            j.at("ny").get<int>(), j.at("per_cell_counts").get<std::vector<std::vector<int>>>(),
            j.at("bound").get<std::int64_t>()};
}

BoundReport bound_report_from_json(const Json& j) {
    return {j.at("q_plus").get<double>(),  j.at("q_minus").get<double>(), j.at("D_plus").get<double>(),
            j.at("D_minus").get<double>(), j.at("N_bar").get<double>(),   j.at("spectral_factor").get<double>(),
            j.at("A").get<double>(),       j.at("B").get<double>(),
            arithmetic_mode_from_string(j.at("mode").get<std::string>())};
}

CuspBoundReport cusp_bound_report_from_json(const Json& j) {
    CuspBoundReport r{cusp_case_from_string(j.at("case").get<std::string>()), j.at("base_A").get<double>(),
                      j.at("base_B").get<double>(), j.at("offset_terms").get<std::string>(), std::nullopt,
                      std::nullopt};
    if (!j.at("A_tilde").is_null()) r.A_tilde = j.at("A_tilde").get<double>();
    if (!j.at("B_tilde").is_null()) r.B_tilde = j.at("B_tilde").get<double>();
    return r;
}

Json make_record(const std::string& command, const RunConfig& cfg, const Json& fields) {
    Json j{{"tool", "greenbound"}, {"version", tool_version}, {"command", command}, {"config", to_json(cfg)}};
    for (const auto& [k, v] : fields.items()) j[k] = v;
    return j;
}

}  // namespace greenbound
