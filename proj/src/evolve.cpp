#include "manakov/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "manakov/errors.hpp"
#include "manakov/fft.hpp"
#include "manakov/io_util.hpp"

namespace manakov {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void half_kick(FieldState& s, double dt_half) {
    const std::size_t n = s.n;
    for (std::size_t i = 0; i < n; ++i) {
        const double intensity =
            std::norm(s.q[0][i]) + std::norm(s.q[1][i]) + std::norm(s.q[2][i]);
        const Complex rot = std::polar(1.0, dt_half * intensity);
        s.q[0][i] *= rot;
        s.q[1][i] *= rot;
        s.q[2][i] *= rot;
    }
}

void linear_step(FieldState& s, const std::vector<Complex>& multiplier) {
    for (int c = 0; c < 3; ++c) {
        fft_inplace(s.q[c], false);
        for (std::size_t j = 0; j < s.n; ++j) s.q[c][j] *= multiplier[j];
        fft_inplace(s.q[c], true);
    }
}

std::vector<Complex> linear_multiplier(const FieldState& s, double dt) {
    std::vector<Complex> mult(s.n);
    for (std::size_t j = 0; j < s.n; ++j) {
        const double k = s.k_at(j);
        mult[j] = std::polar(1.0, -0.5 * dt * k * k);
    }
    return mult;
}

void check_step(const FieldState& s, double dt) {
    // Negative dt is allowed (exact substeps invert cleanly); zero is not.
    if (dt == 0 || !std::isfinite(dt)) throw StabilityError("step_strang: bad dt");
    const double k_max = kPi / s.dx();
    // Exact substeps make the scheme unconditionally stable; the phase of the
    // highest grid mode per step is still capped as a sanity guard.
    if (0.5 * std::abs(dt) * k_max * k_max > 64.0 * kPi)
        throw StabilityError("step_strang: dt wraps the highest grid mode many times over");
}

void strang_inplace(FieldState& s, double dt, const std::vector<Complex>& multiplier) {
    half_kick(s, 0.5 * dt);
    linear_step(s, multiplier);
    half_kick(s, 0.5 * dt);
    s.t += dt;
    s.dt_last = dt;
}

}  // namespace

FieldState make_state(const InitialProfile& profile, double box_half_width,
                      std::size_t n_points) {
    if (!is_pow2(n_points)) throw InvalidInputError("make_state: n_points must be 2^k");
    if (!(box_half_width > 0)) throw InvalidInputError("make_state: box must be positive");
    profile.validate();
    FieldState s;
    s.box_half_width = box_half_width;
    s.n = n_points;
    s.t = 0;
    for (int c = 0; c < 3; ++c) s.q[c].resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const CRow3 v = profile.eval(s.x_at(i));
        s.q[0][i] = v[0];
        s.q[1][i] = v[1];
        s.q[2][i] = v[2];
    }
    return s;
}

FieldState step_strang(const FieldState& state, double dt) {
    check_step(state, dt);
    FieldState s = state;
    const std::vector<Complex> mult = linear_multiplier(s, dt);
    strang_inplace(s, dt, mult);
    return s;
}

FieldState evolve_to(const FieldState& state, double T, double dt) {
    if (!(T > state.t)) throw InvalidInputError("evolve_to: T must exceed current time");
    if (!(dt > 0)) throw InvalidInputError("evolve_to: dt must be positive");
    check_step(state, dt);
    FieldState s = state;
    const std::vector<Complex> mult = linear_multiplier(s, dt);
    const double span = T - s.t;
    const long n_full = static_cast<long>(std::floor(span / dt * (1.0 + 1e-12)));
    for (long i = 0; i < n_full; ++i) strang_inplace(s, dt, mult);
    const double rest = T - s.t;
    if (rest > 1e-12 * std::max(1.0, T)) {
        const std::vector<Complex> mult_rest = linear_multiplier(s, rest);
        strang_inplace(s, rest, mult_rest);
    }
    s.t = T;
    return s;
}

Conserved conserved_quantities(const FieldState& state) {
    Conserved c;
    const double dx = state.dx();
    double m[3] = {0, 0, 0};
    double quartic = 0;
    for (std::size_t i = 0; i < state.n; ++i) {
        const double i0 = std::norm(state.q[0][i]);
        const double i1 = std::norm(state.q[1][i]);
        const double i2 = std::norm(state.q[2][i]);
        m[0] += i0;
        m[1] += i1;
        m[2] += i2;
        const double total = i0 + i1 + i2;
        quartic += total * total;
    }
    double grad = 0;
    for (int comp = 0; comp < 3; ++comp) {
        std::vector<Complex> hat = fft(state.q[comp]);
        const double scale = 1.0 / static_cast<double>(state.n);
        for (std::size_t j = 0; j < state.n; ++j) {
            const double k = state.k_at(j);
            grad += k * k * std::norm(hat[j]) * scale * scale;
        }
    }
    // Parseval: sum |q_x|^2 dx = dx * n * sum k^2 |hat|^2 / n^2
    c.m1 = m[0] * dx;
    c.m2 = m[1] * dx;
    c.m3 = m[2] * dx;
    c.energy = 0.5 * grad * dx * static_cast<double>(state.n) - 0.5 * quartic * dx;
    return c;
}

TailRunResult dispersive_tail_run(const InitialProfile& profile,
                                  std::vector<double> t_list,
                                  const SolverConfig& config) {
    if (t_list.empty()) throw InvalidInputError("dispersive_tail_run: empty T list");
    std::sort(t_list.begin(), t_list.end());
    t_list.erase(std::unique(t_list.begin(), t_list.end()), t_list.end());
    if (!(t_list.front() > 0)) throw InvalidInputError("dispersive_tail_run: T must be positive");
    const double t_max = t_list.back();

    const double required = 2.0 * config.cone_c * t_max + config.box_margin;
    double box = config.box_half_width;
    if (box <= 0) {
        box = std::max(160.0, required);
    } else if (box < required) {
        std::ostringstream msg;
        msg << "dispersive_tail_run: box half-width " << box << " undersized; need >= "
            << required << " for cone C=" << config.cone_c << " up to T=" << t_max;
        throw DomainError(msg.str());
    }

    FieldState s = make_state(profile, box, config.n_points);
    const double k_max = kPi / s.dx();
    const double cfl = 0.5 * config.dt * k_max * k_max;

    TailRunResult out;
    out.box_half_width = box;
    out.cfl_phase = cfl;
    out.cfl_warning = cfl > kPi;

    const Conserved c0 = conserved_quantities(s);
    const double e_scale = std::max(std::abs(c0.energy), 1e-30);

    for (double target : t_list) {
        s = evolve_to(s, target, config.dt);
        const Conserved c = conserved_quantities(s);
        double mdrift = 0;
        const double masses0[3] = {c0.m1, c0.m2, c0.m3};
        const double masses[3] = {c.m1, c.m2, c.m3};
        for (int j = 0; j < 3; ++j)
            if (masses0[j] > 1e-30)
                mdrift = std::max(mdrift, std::abs(masses[j] - masses0[j]) / masses0[j]);
        out.mass_drift.push_back(mdrift);
        out.energy_drift.push_back(std::abs(c.energy - c0.energy) / e_scale);

        double edge = 0;
        const std::size_t n = s.n;
        const std::size_t tenth = n / 10;
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= tenth / 2 && i < n - tenth / 2) continue;  // outer 10% of the box
            const double mag = std::sqrt(std::norm(s.q[0][i]) + std::norm(s.q[1][i]) +
                                         std::norm(s.q[2][i]));
            edge = std::max(edge, mag);
        }
        out.boundary_magnitude.push_back(edge);
        out.snapshots.push_back(s);
    }
    return out;
}

std::string snapshot_csv(const FieldState& state) {
    std::ostringstream out;
    out << "x,t,q1_re,q1_im,q2_re,q2_im,q3_re,q3_im,lambda0,nu,in_cone\n";
    for (std::size_t i = 0; i < state.n; ++i) {
        out << format_double(state.x_at(i)) << ',' << format_double(state.t);
        for (int c = 0; c < 3; ++c)
            out << ',' << format_double(state.q[c][i].real()) << ','
                << format_double(state.q[c][i].imag());
        out << ",,,\n";
    }
    return out.str();
}

FieldSnapshot snapshot_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("snapshot csv: empty");
    FieldSnapshot snap;
    bool have_t = false;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() < 8) throw InvalidInputError("snapshot csv: short row");
        snap.x.push_back(parse_double(f[0]));
        const double t = parse_double(f[1]);
        if (!have_t) {
            snap.t = t;
            have_t = true;
        } else if (t != snap.t) {
            throw InvalidInputError("snapshot csv: mixed timestamps");
        }
        CRow3 q;
        for (int c = 0; c < 3; ++c)
            q[c] = Complex(parse_double(f[2 + 2 * c]), parse_double(f[3 + 2 * c]));
        snap.q.push_back(q);
    }
    if (snap.x.empty()) throw InvalidInputError("snapshot csv: no rows");
    return snap;
}

}  // namespace manakov
