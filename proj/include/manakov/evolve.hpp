#pragma once

#include <array>
#include <string>
#include <vector>

#include "manakov/profile.hpp"
#include "manakov/types.hpp"

namespace manakov {

// Periodic spectral state on [-box, box) with 2^k points.
struct FieldState {
    double box_half_width = 0;
    std::size_t n = 0;
    double t = 0;
    std::array<std::vector<Complex>, 3> q;
    double dt_last = 0;

    double dx() const { return 2.0 * box_half_width / static_cast<double>(n); }
    double x_at(std::size_t i) const {
        return -box_half_width + dx() * static_cast<double>(i);
    }
    // angular wavenumber of mode j with FFT index ordering
    double k_at(std::size_t j) const {
        const double base = kPi / box_half_width;
        const auto half = n / 2;
        return base * (j < half ? static_cast<double>(j)
                                : static_cast<double>(j) - static_cast<double>(n));
    }
};

FieldState make_state(const InitialProfile& profile, double box_half_width,
                      std::size_t n_points);

// One Strang step: half nonlinear kick e^{i dt/2 (|q1|^2+|q2|^2+|q3|^2)},
// exact linear substep via the Fourier multiplier e^{-i dt k^2/2}, half kick.
FieldState step_strang(const FieldState& state, double dt);

// Repeated Strang steps with a final fractional step to land exactly on T.
FieldState evolve_to(const FieldState& state, double T, double dt);

struct Conserved {
    double m1 = 0, m2 = 0, m3 = 0;
    double energy = 0;  // int (|q_x|^2 - |q|^4)/2 dx, spectral derivative
};

Conserved conserved_quantities(const FieldState& state);

struct SolverConfig {
    std::size_t n_points = 8192;
    double box_half_width = 0;  // 0 = auto-size from cone and margin
    double dt = 2e-3;
    double cone_c = 1.0;
    double box_margin = 40.0;
};

struct TailRunResult {
    std::vector<FieldState> snapshots;       // one per requested T, ascending
    std::vector<double> boundary_magnitude;  // max |q| over the outer 10%
    std::vector<double> mass_drift;          // max_j relative drift per snapshot
    std::vector<double> energy_drift;        // relative drift per snapshot
    double box_half_width = 0;
    double cfl_phase = 0;  // dt * k_max^2 / 2
    bool cfl_warning = false;
};

// Run to max(T_list) collecting snapshots along the way. The box must satisfy
// box >= 2 * C * max(T) + margin (checked before any stepping; auto-sizing
// picks max(160, that bound)).
TailRunResult dispersive_tail_run(const InitialProfile& profile,
                                  std::vector<double> t_list,
                                  const SolverConfig& config);

// Snapshot CSV uses the asym-field schema with lambda0/nu/in_cone left empty.
std::string snapshot_csv(const FieldState& state);

struct FieldSnapshot {
    double t = 0;
    std::vector<double> x;
    std::vector<CRow3> q;
};

FieldSnapshot snapshot_from_csv(const std::string& text);

}  // namespace manakov
