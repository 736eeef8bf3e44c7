#pragma once

#include <string>
#include <vector>

#include "manakov/evolve.hpp"
#include "manakov/profile.hpp"

namespace manakov {

struct LambdaGridSpec {
    double min = -4.0;
    double max = 4.0;
    int n = 257;
};

// One JSON document drives every subcommand; unspecified fields take the
// defaults below and the materialized form is echoed into run metadata so a
// run is reproducible from its outputs alone.
struct RunConfig {
    InitialProfile profile;
    std::string profile_csv_path;  // set when the profile came from a CSV
    LambdaGridSpec lambda_grid;
    double scattering_x_step = 1e-3;
    double cone_c = 1.0;
    std::vector<double> t_list = {50.0, 100.0, 200.0, 400.0};
    SolverConfig solver;
    std::string out_dir = "out";
    std::string phase_convention = "auto";  // theorem | eta2 | auto
    double t_min_asym = 5.0;
    double quad_tol = 1e-8;

    void validate() const;
    std::string materialized_json() const;
};

RunConfig config_from_json_string(const std::string& text);
RunConfig config_from_file(const std::string& path);

}  // namespace manakov
