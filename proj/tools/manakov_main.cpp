// Command-line driver: scatter / asym / evolve / compare over one JSON config.
// Exit codes: 0 success, 2 validation failure, 3 numerical-accuracy failure.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "manakov/asymptotics.hpp"
#include "manakov/compare.hpp"
#include "manakov/errors.hpp"
#include "manakov/evolve.hpp"
#include "manakov/io_util.hpp"
#include "manakov/run_config.hpp"
#include "manakov/scattering.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace manakov;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

constexpr double kUnitarityThreshold = 1e-6;
constexpr double kDetSThreshold = 1e-6;

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
}

std::string t_tag(double t) { return format_double(t); }

int cmd_scatter(const RunConfig& cfg) {
    const LaxAssembly lax = assemble_lax(cfg.profile);
    const ScatteringData data =
        scattering_grid(lax, cfg.lambda_grid.min, cfg.lambda_grid.max, cfg.lambda_grid.n,
                        cfg.scattering_x_step);
    write_file_atomic(out_path(cfg, "scattering.json"), data.to_json_string());
    write_file_atomic(out_path(cfg, "scatter_config.json"), cfg.materialized_json());

    double max_u = 0, max_d = 0;
    for (double v : data.unitarity_defect) max_u = std::max(max_u, v);
    for (double v : data.det_s_defect) max_d = std::max(max_d, v);
    std::cout << "scatter: " << data.lambda.size() << " nodes on ["
              << cfg.lambda_grid.min << ", " << cfg.lambda_grid.max << "]\n"
              << "  max unitarity defect  " << max_u << "\n"
              << "  max |det s - 1|       " << max_d << "\n"
              << "  min |det a|           " << data.min_abs_det_a << "\n"
              << "  truncation tail bound " << data.tail_bound << "\n"
              << "  fingerprint           " << data.profile_fingerprint << "\n";
    if (max_u > kUnitarityThreshold || max_d > kDetSThreshold) {
        std::cerr << "scatter: defect thresholds exceeded\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_asym(const RunConfig& cfg, const std::string& scattering_path, double t,
             double x_min, double x_max, long x_count) {
    const ScatteringData data =
        ScatteringData::from_json_string(read_file(scattering_path));
    std::vector<double> xs;
    if (x_count > 0) {
        for (long i = 0; i < x_count; ++i)
            xs.push_back(x_count == 1
                             ? x_min
                             : x_min + (x_max - x_min) * static_cast<double>(i) /
                                   static_cast<double>(x_count - 1));
    } else {
        // default: 2049 evenly spaced points across the cone [-C t, C t]
        const double lim = cfg.cone_c * t;
        const long m = 2049;
        for (long i = 0; i < m; ++i)
            xs.push_back(-lim + 2.0 * lim * static_cast<double>(i) /
                                    static_cast<double>(m - 1));
    }
    const PhaseConvention conv = cfg.phase_convention == "eta2"
                                     ? PhaseConvention::Eta2
                                     : PhaseConvention::Theorem;
    const AsymField f =
        asym_field(data, xs, t, cfg.cone_c, conv, cfg.t_min_asym, cfg.quad_tol);
    const std::string name = "asym_t" + t_tag(t) + ".csv";
    write_file_atomic(out_path(cfg, name), asym_field_csv(f));
    std::cout << "asym: wrote " << name << " (" << xs.size() << " rows, convention "
              << convention_name(conv) << ")\n";
    return kExitOk;
}

int cmd_evolve(const RunConfig& cfg) {
    const TailRunResult run = dispersive_tail_run(cfg.profile, cfg.t_list, cfg.solver);
    json meta;
    meta["profile_fingerprint"] = profile_fingerprint(cfg.profile);
    meta["n_points"] = cfg.solver.n_points;
    meta["box_half_width"] = run.box_half_width;
    meta["dt"] = cfg.solver.dt;
    meta["t_list"] = cfg.t_list;
    meta["mass_drift"] = run.mass_drift;
    meta["energy_drift"] = run.energy_drift;
    meta["boundary_magnitude"] = run.boundary_magnitude;
    meta["cfl_phase"] = run.cfl_phase;
    meta["cfl_warning"] = run.cfl_warning;
    meta["config"] = json::parse(cfg.materialized_json());
    for (const auto& snap : run.snapshots) {
        const std::string name = "snapshot_t" + t_tag(snap.t) + ".csv";
        write_file_atomic(out_path(cfg, name), snapshot_csv(snap));
    }
    write_file_atomic(out_path(cfg, "evolve_meta.json"), meta.dump(2) + "\n");
    std::cout << "evolve: " << run.snapshots.size() << " snapshots, box "
              << run.box_half_width << ", dt " << cfg.solver.dt << "\n";
    for (std::size_t i = 0; i < run.snapshots.size(); ++i)
        std::cout << "  T=" << run.snapshots[i].t << " mass drift " << run.mass_drift[i]
                  << " boundary " << run.boundary_magnitude[i] << "\n";
    if (run.cfl_warning)
        std::cout << "  note: dt*k_max^2/2 = " << run.cfl_phase
                  << " exceeds pi (highest grid mode wraps per step)\n";
    return kExitOk;
}

int cmd_compare(const RunConfig& cfg) {
    const ScatteringData data =
        ScatteringData::from_json_string(read_file(out_path(cfg, "scattering.json")));
    const json meta = json::parse(read_file(out_path(cfg, "evolve_meta.json")));
    const std::string snap_fp = meta.at("profile_fingerprint").get<std::string>();
    if (snap_fp != data.profile_fingerprint)
        throw InvalidInputError("compare: scattering and snapshots come from different "
                                "profiles (fingerprint mismatch)");
    const std::string cfg_fp = profile_fingerprint(cfg.profile);
    if (cfg_fp != data.profile_fingerprint)
        throw InvalidInputError("compare: config profile does not match artifacts "
                                "(fingerprint mismatch)");

    std::vector<FieldSnapshot> snaps;
    for (double t : cfg.t_list) {
        const std::string name = "snapshot_t" + t_tag(t) + ".csv";
        snaps.push_back(snapshot_from_csv(read_file(out_path(cfg, name))));
    }
    const ComparisonReport rep = compare_cone(data, snaps, cfg);
    write_file_atomic(out_path(cfg, "comparison.json"), rep.to_json_string());
    std::cout << "compare: convention " << rep.chosen_convention << ", fitted p "
              << rep.fitted_p << (rep.degenerate ? " (degenerate)" : "") << "\n";
    for (std::size_t i = 0; i < rep.t.size(); ++i)
        std::cout << "  T=" << rep.t[i] << " E_abs " << rep.e_abs[i] << " E_rel "
                  << rep.e_rel[i] << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direct scattering, long-time leading-order asymptotics, and a "
                 "split-step solver for the 3-component Manakov system"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::string convention_override;
    app.add_option("--config", config_path, "JSON config path")->required();
    app.add_option("--out", out_override, "output directory override");
    app.add_option("--phase-convention", convention_override,
                   "theorem|eta2|auto (compare/asym)");

    auto* sc_scatter = app.add_subcommand("scatter", "tabulate the reflection data");
    auto* sc_asym = app.add_subcommand("asym", "evaluate the leading-order field");
    auto* sc_evolve = app.add_subcommand("evolve", "run the split-step solver");
    auto* sc_compare = app.add_subcommand("compare", "cone error report");
    for (auto* sc : {sc_scatter, sc_asym, sc_evolve, sc_compare}) sc->fallthrough();

    std::string scattering_path;
    double asym_t = 0;
    double x_min = 0, x_max = 0;
    long x_count = 0;
    sc_asym->add_option("--scattering", scattering_path, "scattering.json path");
    sc_asym->add_option("--t", asym_t, "evaluation time")->required();
    sc_asym->add_option("--x-min", x_min, "explicit x grid start");
    sc_asym->add_option("--x-max", x_max, "explicit x grid end");
    sc_asym->add_option("--x-count", x_count, "explicit x grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        RunConfig cfg = config_from_file(config_path);
        if (!out_override.empty()) cfg.out_dir = out_override;
        if (!convention_override.empty()) {
            if (convention_override != "auto")
                (void)convention_from_name(convention_override);  // validate
            cfg.phase_convention = convention_override;
        }
        if (sc_scatter->parsed()) return cmd_scatter(cfg);
        if (sc_asym->parsed()) {
            if (scattering_path.empty())
                scattering_path = out_path(cfg, "scattering.json");
            return cmd_asym(cfg, scattering_path, asym_t, x_min, x_max, x_count);
        }
        if (sc_evolve->parsed()) return cmd_evolve(cfg);
        if (sc_compare->parsed()) return cmd_compare(cfg);
        return kExitValidation;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
