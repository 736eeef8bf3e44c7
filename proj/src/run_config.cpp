#include "manakov/run_config.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "manakov/errors.hpp"
#include "manakov/io_util.hpp"

namespace manakov {

using nlohmann::json;

void RunConfig::validate() const {
    profile.validate();
    if (lambda_grid.n < 16) throw InvalidInputError("config: lambda grid needs >= 16 nodes");
    if (!(lambda_grid.max > lambda_grid.min))
        throw InvalidInputError("config: bad lambda range");
    if (!(cone_c > 0)) throw InvalidInputError("config: cone constant must be positive");
    if (t_list.empty()) throw InvalidInputError("config: empty T list");
    for (double t : t_list)
        if (!(t >= t_min_asym))
            throw InvalidInputError("config: every T must be >= t_min_asym");
    if (!std::is_sorted(t_list.begin(), t_list.end()))
        throw InvalidInputError("config: T list must be ascending");
    if (!(scattering_x_step > 0) || !(solver.dt > 0) || !(quad_tol > 0))
        throw InvalidInputError("config: steps and tolerances must be positive");
    if (phase_convention != "auto" && phase_convention != "theorem" &&
        phase_convention != "eta2")
        throw InvalidInputError("config: phase_convention must be theorem|eta2|auto");

    // every queried lambda0 = -x/2t with |x/t| <= C, plus the unit window
    // below it for the chi integral, must sit inside the lambda table
    const double need_lo = -0.5 * cone_c - 1.0;
    const double need_hi = 0.5 * cone_c;
    if (lambda_grid.min > need_lo || lambda_grid.max < need_hi)
        throw InvalidInputError(
            "config: lambda grid must cover [-C/2 - 1, C/2] for the cone evaluation");
}

std::string RunConfig::materialized_json() const {
    json j;
    json prof;
    prof["kind"] = kind_name(profile.kind);
    json amps = json::array();
    for (const auto& c : profile.amplitudes) amps.push_back({c.real(), c.imag()});
    prof["amplitudes"] = amps;
    prof["width"] = profile.width;
    prof["center"] = profile.center;
    prof["support_cutoff"] = profile.support_cutoff;
    if (!profile_csv_path.empty()) prof["csv_path"] = profile_csv_path;
    j["profile"] = prof;
    j["lambda_grid"] = {{"min", lambda_grid.min}, {"max", lambda_grid.max},
                        {"n", lambda_grid.n}};
    j["scattering_x_step"] = scattering_x_step;
    j["cone_c"] = cone_c;
    j["t_list"] = t_list;
    j["solver"] = {{"n_points", solver.n_points},
                   {"box_half_width", solver.box_half_width},
                   {"dt", solver.dt},
                   {"box_margin", solver.box_margin}};
    j["out_dir"] = out_dir;
    j["phase_convention"] = phase_convention;
    j["t_min_asym"] = t_min_asym;
    j["quad_tol"] = quad_tol;
    j["profile_fingerprint"] = profile_fingerprint(profile);
    return j.dump(2) + "\n";
}

RunConfig config_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInputError(std::string("config json: ") + e.what());
    }
    RunConfig c;
    try {
        if (j.contains("profile")) {
            const json& p = j["profile"];
            if (p.contains("csv_path")) {
                c.profile = profile_from_csv(p["csv_path"].get<std::string>());
                c.profile_csv_path = p["csv_path"].get<std::string>();
                if (p.contains("support_cutoff"))
                    c.profile.support_cutoff = p["support_cutoff"].get<double>();
            } else {
                if (p.contains("kind")) c.profile.kind = kind_from_name(p["kind"]);
                if (p.contains("amplitudes")) {
                    const json& a = p["amplitudes"];
                    for (std::size_t i = 0; i < 3 && i < a.size(); ++i)
                        c.profile.amplitudes[i] =
                            Complex(a.at(i).at(0).get<double>(), a.at(i).at(1).get<double>());
                }
                if (p.contains("width")) c.profile.width = p["width"].get<double>();
                if (p.contains("center")) c.profile.center = p["center"].get<double>();
                if (p.contains("support_cutoff"))
                    c.profile.support_cutoff = p["support_cutoff"].get<double>();
            }
        }
        if (j.contains("lambda_grid")) {
            const json& g = j["lambda_grid"];
            if (g.contains("min")) c.lambda_grid.min = g["min"].get<double>();
            if (g.contains("max")) c.lambda_grid.max = g["max"].get<double>();
            if (g.contains("n")) c.lambda_grid.n = g["n"].get<int>();
        }
        if (j.contains("scattering_x_step"))
            c.scattering_x_step = j["scattering_x_step"].get<double>();
        if (j.contains("cone_c")) c.cone_c = j["cone_c"].get<double>();
        if (j.contains("t_list")) c.t_list = j["t_list"].get<std::vector<double>>();
        if (j.contains("solver")) {
            const json& s = j["solver"];
            if (s.contains("n_points")) c.solver.n_points = s["n_points"].get<std::size_t>();
            if (s.contains("box_half_width"))
                c.solver.box_half_width = s["box_half_width"].get<double>();
            if (s.contains("dt")) c.solver.dt = s["dt"].get<double>();
            if (s.contains("box_margin")) c.solver.box_margin = s["box_margin"].get<double>();
        }
        if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("phase_convention"))
            c.phase_convention = j["phase_convention"].get<std::string>();
        if (j.contains("t_min_asym")) c.t_min_asym = j["t_min_asym"].get<double>();
        if (j.contains("quad_tol")) c.quad_tol = j["quad_tol"].get<double>();
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("config json: ") + e.what());
    }
    c.solver.cone_c = c.cone_c;
    c.validate();
    return c;
}

RunConfig config_from_file(const std::string& path) {
    return config_from_json_string(read_file(path));
}

}  // namespace manakov
