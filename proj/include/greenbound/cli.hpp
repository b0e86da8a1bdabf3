#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "greenbound/serialize.hpp"

namespace greenbound {

enum ExitCode : int { exit_ok = 0, exit_config = 1, exit_numerical = 2, exit_mismatch = 3 };

struct ReproItem {
    std::string name;
    std::string observed;
    std::string expected;
    bool passed;
};

/// Recomputes the published SL2(Z) certificate step by step. `vol` replaces the group volume
/// (for sensitivity runs); grid is the count subdivision per axis.
std::vector<ReproItem> reproduce_paper(double vol = constants::vol_sl2z, int grid = constants::count_grid);

Json to_json(const ReproItem& item);

/// Parses "NxM" (or a single N for a square grid).
std::pair<int, int> parse_grid(const std::string& s);

/// Entry point of the greenbound executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace greenbound
