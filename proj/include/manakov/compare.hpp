#pragma once

#include <string>
#include <vector>

#include "manakov/asymptotics.hpp"
#include "manakov/evolve.hpp"
#include "manakov/run_config.hpp"

namespace manakov {

// Per-snapshot, per-convention cone statistics.
struct ConeStats {
    double e_abs = 0;            // max over the cone of |q_num - q_asym|
    double e_rel = 0;            // e_abs * sqrt(2T / max(-nu))
    double mean_abs_phase = 0;   // mean |arg <q_num, q_asym>| over the cone
    double amplitude_ratio = 0;  // mean |q_num| / |q_asym| over the cone
};

struct ComparisonReport {
    std::vector<double> t;
    std::vector<ConeStats> theorem;
    std::vector<ConeStats> eta2;
    std::string chosen_convention;
    std::vector<double> e_abs;  // selected convention, per T
    std::vector<double> e_rel;
    double fitted_p = 0;        // E_abs(T) ~ c T^{-p}
    double fit_residual = 0;
    bool degenerate = false;    // zero field; decay fit meaningless
    std::string profile_fingerprint;

    std::string to_json_string() const;
};

// Snapshots must be ascending in t and share the scattering table's profile.
ComparisonReport compare_cone(const ScatteringData& data,
                              const std::vector<FieldSnapshot>& snapshots,
                              const RunConfig& config);

}  // namespace manakov
