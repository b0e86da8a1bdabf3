#include "greenbound/cli.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "greenbound/checks.hpp"
#include "greenbound/error.hpp"

namespace greenbound {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> parse_numbers(const std::string& s, std::size_t n, const std::string& field) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(',', pos);
        const std::string piece = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ConstraintError(field, "cannot parse '" + s + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.size() != n) throw ConstraintError(field, "expected " + std::to_string(n) + " comma-separated numbers");
    return out;
}

void emit(const Json& record, const std::string& path, std::ostream& out) {
    if (path.empty()) return;
    if (path == "-") {
        out << record.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    f << record.dump(2) << "\n";
    if (!f) throw ConstraintError("--json", "cannot write '" + path + "'");
}

// Options shared by the subcommands that read a RunConfig.
struct ConfigFlags {
    std::string config;
    std::string preset;
    std::string json;
    CLI::Option* mode = nullptr;
    std::string mode_value;
    CLI::Option* eta = nullptr;
    std::string eta_value;
    CLI::Option* nbar = nullptr;
    double nbar_value = 0.0;
    CLI::Option* vol = nullptr;
    double vol_value = 0.0;

    void attach(CLI::App* app, bool with_mode) {
        app->add_option("--config", config, "JSON run configuration");
        app->add_option("--preset", preset, "sl2z (group and reference parameters) or y0 (count region)")
            ->check(CLI::IsMember({"sl2z", "y0"}));
        app->add_option("--json", json, "write the machine record to FILE ('-' for stdout)");
        if (with_mode) {
            mode = app->add_option("--mode", mode_value, "exact or paper arithmetic");
            eta = app->add_option("--eta-preset", eta_value, "selberg-3-16 or kim-sarnak");
            nbar = app->add_option("--N-bar", nbar_value, "average lattice count N_bar");
            vol = app->add_option("--vol", vol_value, "override the group volume");
        }
    }

    RunConfig load() const {
        RunConfig cfg;
        if (!config.empty()) cfg = load_run_config(config);
        if (preset == "sl2z") {
            cfg.group = GroupContext::sl2z();
            cfg.group_name = "sl2z";
            cfg.params = ParamSet::reference();
            cfg.search.seed_params = cfg.params;
        } else if (preset == "y0") {
            cfg.region = Rectangle(constants::y0_x_min, constants::y0_x_max, constants::y0_y_min, constants::y0_y_max);
        }
        if (mode && mode->count()) cfg.mode = arithmetic_mode_from_string(mode_value);
        if (eta && eta->count()) cfg.group.eta = eta_preset(eta_value);
        if (nbar && nbar->count()) cfg.N_bar = nbar_value;
        if (vol && vol->count()) cfg.group.vol = vol_value;
        return cfg;
    }
};

void print_report(std::ostream& out, const BoundReport& r) {
    out << fmt("mode             %s\n", to_string(r.mode));
    out << fmt("q+               %.6f\n", r.q_plus);
    out << fmt("q-               %.6f\n", r.q_minus);
    out << fmt("D+               %.6f\n", r.D_plus);
    out << fmt("D-               %.6f\n", r.D_minus);
    out << fmt("N_bar            %.6g\n", r.N_bar);
    out << fmt("spectral factor  %.6f\n", r.spectral_factor);
    out << fmt("A                %.1f\n", r.A);
    out << fmt("B                %.1f\n", r.B);
}

}  // namespace

std::pair<int, int> parse_grid(const std::string& s) {
    const auto x = s.find_first_of("xX");
    try {
        std::size_t used = 0;
        if (x == std::string::npos) {
            const int n = std::stoi(s, &used);
            if (used != s.size() || n < 1) throw std::invalid_argument(s);
            return {n, n};
        }
        const std::string a = s.substr(0, x), b = s.substr(x + 1);
        const int nx = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const int ny = std::stoi(b, &used);
        if (used != b.size() || nx < 1 || ny < 1) throw std::invalid_argument(s);
        return {nx, ny};
    } catch (const std::exception&) {
        throw ConstraintError("grid", "expected NxM with positive integers, got '" + s + "'");
    }
}

Json to_json(const ReproItem& item) {
    return {{"name", item.name}, {"observed", item.observed}, {"expected", item.expected}, {"passed", item.passed}};
}

std::vector<ReproItem> reproduce_paper(double vol, int grid) {
    std::vector<ReproItem> items;
    GroupContext ctx = GroupContext::sl2z();
    ctx.vol = vol;
    const auto ref = ParamSet::reference();

    const Rectangle Y0(constants::y0_x_min, constants::y0_x_max, constants::y0_y_min, constants::y0_y_max);
    const auto cert = count_bound(Y0, constants::count_radius_U, grid, grid);
    items.push_back({fmt("count N(z,z,17) on Y0, grid %dx%d", grid, grid), std::to_string(cert.bound),
                     "216 within 5% [206, 227]", cert.bound >= 206 && cert.bound <= 227});

    const auto q = compute_q(ref, ctx);
    items.push_back({"q+", fmt("%.6f", q.plus), "68.41 +- 0.02 and < 69.0",
                     std::abs(q.plus - 68.41) <= 0.02 && q.plus < constants::ref_q_plus_cap});
    items.push_back({"q-", fmt("%.6f", q.minus), "-215.84 +- 0.02 and > -216",
                     std::abs(q.minus + 215.84) <= 0.02 && q.minus > constants::ref_q_minus_cap});

    const auto D = compute_D(ref);
    items.push_back({"D+", fmt("%.6f", D.plus), "<= 18.5", D.plus <= constants::ref_D_plus_cap});
    items.push_back({"D-", fmt("%.6f", D.minus), "<= 9.61", D.minus <= constants::ref_D_minus_cap});

    const auto paper = assemble(ref, ctx, constants::reference_count_bound, ArithmeticMode::paper_arithmetic);
    items.push_back({"paper-arithmetic A", fmt("%.1f", paper.A), "-28682 +- 100", std::abs(paper.A + 28682.0) <= 100.0});
    items.push_back({"paper-arithmetic B", fmt("%.1f", paper.B), "15080 +- 100", std::abs(paper.B - 15080.0) <= 100.0});

    const auto exact = assemble_from(q, D, ctx.eta, constants::reference_count_bound, ArithmeticMode::theorem_exact);
    items.push_back({"theorem-exact A", fmt("%.1f", exact.A), ">= -2.87e4", exact.A >= constants::ref_headline_A});
    items.push_back({"theorem-exact B", fmt("%.1f", exact.B), "<= 1.51e4", exact.B <= constants::ref_headline_B});
    return items;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit bounds for Green functions on SL2(Z)\\H and lattice point counts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    // count
    auto* count = app.add_subcommand("count", "upper bound for #{gamma : u(z, gamma z) <= U} over a rectangle");
    ConfigFlags count_flags;
    count_flags.attach(count, false);
    double count_U = 0.0;
    std::string count_grid, count_point, count_region;
    unsigned count_threads = 0;
    auto* count_U_opt = count->add_option("--U", count_U, "radius parameter U >= 1");
    auto* count_grid_opt = count->add_option("--grid", count_grid, "subdivision NxM");
    auto* count_point_opt = count->add_option("--point", count_point, "single point x,y instead of a region");
    auto* count_region_opt = count->add_option("--region", count_region, "x_min,x_max,y_min,y_max");
    count->add_option("--threads", count_threads, "worker threads (0 = default)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "assemble the A/B certificate");
    ConfigFlags bounds_flags;
    bounds_flags.attach(bounds, true);

    // reproduce-paper
    auto* repro = app.add_subcommand("reproduce-paper", "recompute the published SL2(Z) certificate");
    double repro_vol = constants::vol_sl2z;
    std::string repro_json;
    int repro_grid = constants::count_grid;
    repro->add_option("--vol", repro_vol, "group volume (default pi/6)");
    repro->add_option("--grid", repro_grid, "count subdivision per axis")->check(CLI::PositiveNumber);
    repro->add_option("--json", repro_json, "write the machine record to FILE ('-' for stdout)");

    // cusp-extend
    auto* cusp = app.add_subcommand("cusp-extend", "extend the certificate to a cusp neighbourhood");
    ConfigFlags cusp_flags;
    cusp_flags.attach(cusp, true);
    double eps = 0.0, eps_prime = 0.0, min_c = 0.0;
    int count_pm1 = 0;
    std::string cusp_case;
    auto* eps_opt = cusp->add_option("--eps", eps, "inner radius eps");
    auto* epsp_opt = cusp->add_option("--eps-prime", eps_prime, "outer radius eps'");
    auto* minc_opt = cusp->add_option("--min-c", min_c, "min |c| over non-parabolic elements");
    auto* pm1_opt = cusp->add_option("--count-pm1", count_pm1, "#(Gamma ∩ {±1})");
    auto* case_opt = cusp->add_option("--case", cusp_case, "a, a-prime, b or c");

    // optimize
    auto* opt = app.add_subcommand("optimize", "search for parameters with a tighter certificate");
    ConfigFlags opt_flags;
    opt_flags.attach(opt, true);
    std::string objective;
    int max_iters = 0;
    auto* obj_opt = opt->add_option("--objective", objective, "width or max-abs");
    auto* iters_opt = opt->add_option("--max-iters", max_iters, "coordinate descent sweeps");

    // selftest
    auto* self = app.add_subcommand("selftest", "run the property suites");
    std::string self_json;
    self->add_option("--json", self_json, "write the machine record to FILE ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_config;
    }

    try {
        if (count->parsed()) {
            RunConfig cfg = count_flags.load();
            if (count_U_opt->count()) cfg.U = count_U;
            if (count_grid_opt->count()) std::tie(cfg.nx, cfg.ny) = parse_grid(count_grid);
            if (count_region_opt->count()) {
                const auto v = parse_numbers(count_region, 4, "region");
                if (!(v[2] > 0.0)) throw ConstraintError("region.y_min", "must be > 0");
                if (!(v[3] >= v[2])) throw ConstraintError("region.y_max", "must be >= region.y_min");
                if (!(v[1] >= v[0])) throw ConstraintError("region.x_max", "must be >= region.x_min");
                cfg.region = Rectangle(v[0], v[1], v[2], v[3]);
            }
            if (count_point_opt->count()) {
                const auto v = parse_numbers(count_point, 2, "point");
                if (!(v[1] > 0.0)) throw ConstraintError("point.y", "must be > 0");
                cfg.region = Rectangle::at(UpperHalfPoint(v[0], v[1]));
                cfg.nx = cfg.ny = 1;
            }
            cfg.validate();
            const auto t0 = std::chrono::steady_clock::now();
            const auto cert = count_bound(cfg.region, cfg.U, cfg.nx, cfg.ny, count_threads);
            const double dt = seconds_since(t0);
            const auto& R = cfg.region;
            out << fmt("region  [%g, %g] x [%g, %g]\n", R.x_min(), R.x_max(), R.y_min(), R.y_max());
            out << fmt("U       %g\n", cfg.U);
            out << fmt("grid    %d x %d\n", cfg.nx, cfg.ny);
            out << fmt("bound   %lld\n", static_cast<long long>(cert.bound));
            out << fmt("time    %.2f s\n", dt);
            emit(make_record("count", cfg, to_json(cert)), count_flags.json, out);
            return exit_ok;
        }

        if (bounds->parsed()) {
            RunConfig cfg = bounds_flags.load();
            cfg.validate();
            const auto r = assemble(cfg.params, cfg.group, cfg.N_bar, cfg.mode);
            print_report(out, r);
            emit(make_record("bounds", cfg, to_json(r)), bounds_flags.json, out);
            return exit_ok;
        }

        if (repro->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto items = reproduce_paper(repro_vol, repro_grid);
            bool all = true;
            Json list = Json::array();
            for (const auto& it : items) {
                out << fmt("%s  %-36s observed %-14s expected %s\n", it.passed ? "PASS" : "FAIL", it.name.c_str(),
                           it.observed.c_str(), it.expected.c_str());
                all = all && it.passed;
                list.push_back(to_json(it));
            }
            out << fmt("%s (%.1f s)\n", all ? "all items reproduced" : "reproduction mismatch", seconds_since(t0));
            RunConfig cfg;
            cfg.group.vol = repro_vol;
            cfg.nx = cfg.ny = repro_grid;
            emit(make_record("reproduce-paper", cfg, {{"items", list}, {"all_passed", all}}), repro_json, out);
            return all ? exit_ok : exit_mismatch;
        }

        if (cusp->parsed()) {
            RunConfig cfg = cusp_flags.load();
            CuspGeometry g = cfg.cusp.value_or(CuspGeometry{0.0, 0.0, cfg.params.trapezoid.delta, cfg.group.min_c,
                                                            cfg.group.contains_minus_one ? 2 : 1});
            if (eps_opt->count()) g.eps = eps;
            if (epsp_opt->count()) g.eps_prime = eps_prime;
            if (minc_opt->count()) g.min_c = min_c;
            if (pm1_opt->count()) g.count_pm1 = count_pm1;
            if (case_opt->count()) cfg.cusp_case = cusp_case_from_string(cusp_case);
            if (!cfg.cusp && !(eps_opt->count() && epsp_opt->count()))
                throw ConstraintError("cusp", "--eps and --eps-prime are required without a cusp config");
            g.delta = cfg.params.trapezoid.delta;
            cfg.cusp = g;
            cfg.validate();
            const auto lim = admissible_eps(g.delta, g.min_c);
            const auto base = assemble(cfg.params, cfg.group, cfg.N_bar, cfg.mode);
            const auto r = extend_bounds(base, g, cfg.cusp_case);
            out << fmt("eps' max         %.7f\n", lim.eps_prime_max);
            out << fmt("eps max          %.7f\n", lim.eps_max);
            out << fmt("case             %s\n", to_string(r.cusp_case));
            out << fmt("base A, B        %.1f, %.1f\n", r.base_A, r.base_B);
            if (r.A_tilde) out << fmt("A~, B~           %.4f, %.4f\n", *r.A_tilde, *r.B_tilde);
            out << "bounded quantity " << r.offset_terms << "\n";
            Json fields = to_json(r);
            fields["base_report"] = to_json(base);
            emit(make_record("cusp-extend", cfg, fields), cusp_flags.json, out);
            return exit_ok;
        }

        if (opt->parsed()) {
            RunConfig cfg = opt_flags.load();
            if (obj_opt->count()) cfg.search.objective = objective_from_string(objective);
            if (iters_opt->count()) cfg.search.max_iters = max_iters;
            cfg.search.seed_params = cfg.params;
            cfg.validate();
            const auto r = search(cfg.search, cfg.group, cfg.params.trapezoid.delta, cfg.N_bar);
            const auto& t = r.params.trapezoid;
            out << fmt("objective        %s\n", to_string(cfg.search.objective));
            out << fmt("seed objective   %.3f\n", r.seed_objective);
            out << fmt("best objective   %.3f\n", r.objective);
            out << fmt("alpha+ beta+ sigma+  %.6g %.6g %.6g\n", t.alpha_plus, t.beta_plus, r.params.sigma_plus);
            out << fmt("alpha- beta- sigma-  %.6g %.6g %.6g\n", t.alpha_minus, t.beta_minus, r.params.sigma_minus);
            out << fmt("sweeps, evaluations  %d, %d\n", r.iterations, r.evaluations);
            print_report(out, r.report);
            Json fields{{"params", to_json(r.params)},     {"report", to_json(r.report)},
                        {"objective", r.objective},         {"seed_objective", r.seed_objective},
                        {"iterations", r.iterations},       {"evaluations", r.evaluations}};
            emit(make_record("optimize", cfg, fields), opt_flags.json, out);
            return exit_ok;
        }

        if (self->parsed()) {
            bool all = true;
            Json list = Json::array();
            for (const auto& s : run_property_suites()) {
                out << fmt("%s  %-30s samples %5d  violations %d  (%.2f s)%s%s\n", s.ok() ? "PASS" : "FAIL",
                           s.name.c_str(), s.samples, s.violations, s.seconds, s.ok() ? "" : "  first: ",
                           s.first_violation.c_str());
                all = all && s.ok();
                list.push_back({{"name", s.name},
                                {"samples", s.samples},
                                {"violations", s.violations},
                                {"first_violation", s.first_violation},
                                {"seconds", s.seconds}});
            }
            emit(make_record("selftest", RunConfig{}, {{"suites", list}, {"all_passed", all}}), self_json, out);
            return all ? exit_ok : exit_mismatch;
        }
    } catch (const ConstraintError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_config;
}

}  // namespace greenbound
