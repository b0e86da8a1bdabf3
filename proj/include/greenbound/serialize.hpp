#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "greenbound/bounds.hpp"
#include "greenbound/constants.hpp"
#include "greenbound/cusps.hpp"
#include "greenbound/lattice.hpp"
#include "greenbound/optimize.hpp"

namespace greenbound {

using Json = nlohmann::json;

inline constexpr const char* tool_version = "1.0.0";

/// Everything a CLI run can be configured with. Fields absent from a config file keep these defaults.
struct RunConfig {
    std::string group_name = "sl2z";
    GroupContext group = GroupContext::sl2z();
    ParamSet params = ParamSet::reference();
    Rectangle region{constants::y0_x_min, constants::y0_x_max, constants::y0_y_min, constants::y0_y_max};
    double U = constants::count_radius_U;
    int nx = constants::count_grid;
    int ny = constants::count_grid;
    ArithmeticMode mode = ArithmeticMode::theorem_exact;
    double N_bar = constants::reference_count_bound;
    std::optional<CuspGeometry> cusp;
    CuspCase cusp_case = CuspCase::c;
    SearchConfig search;

    /// Re-checks every module invariant; throws ConstraintError naming the field.
    void validate() const;
};

/// Overlays the fields present in `j` onto `base`. Unknown keys are rejected.
RunConfig run_config_from_json(const Json& j, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

Json to_json(const Rectangle& r);
Json to_json(const ParamSet& p);
Json to_json(const GroupContext& g);
Json to_json(const CuspGeometry& g);
Json to_json(const RunConfig& c);
Json to_json(const CountCertificate& c);
Json to_json(const BoundReport& r);
Json to_json(const CuspBoundReport& r);

Rectangle rectangle_from_json(const Json& j);
ParamSet param_set_from_json(const Json& j, ParamSet base = ParamSet::reference());
GroupContext group_context_from_json(const Json& j, GroupContext base = GroupContext::sl2z());
CountCertificate count_certificate_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j);
CuspBoundReport cusp_bound_report_from_json(const Json& j);

/// Flat machine record: tool, version, command, config echo, then the result fields at top level.
Json make_record(const std::string& command, const RunConfig& cfg, const Json& fields);

}  // namespace greenbound
