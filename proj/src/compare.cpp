#include "manakov/compare.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "manakov/errors.hpp"
#include "manakov/special.hpp"

namespace manakov {

using nlohmann::json;

namespace {

struct Accum {
    double e_abs = 0;
    double phase_sum = 0;
    double ratio_sum = 0;
    long n = 0;
};

void accumulate(Accum& acc, const CRow3& q_num, const CRow3& q_asym) {
    acc.e_abs = std::max(acc.e_abs, (q_num - q_asym).norm());
    const Complex inner = dot_conj(q_num, q_asym);
    if (std::abs(inner) > 0) acc.phase_sum += std::abs(std::arg(inner));
    if (q_asym.norm() > 0) acc.ratio_sum += q_num.norm() / q_asym.norm();
    ++acc.n;
}

ConeStats finish(const Accum& acc, double t, double max_neg_nu) {
    ConeStats s;
    s.e_abs = acc.e_abs;
    s.e_rel = max_neg_nu > 0 ? acc.e_abs * std::sqrt(2.0 * t / max_neg_nu) : 0.0;
    s.mean_abs_phase = acc.n > 0 ? acc.phase_sum / static_cast<double>(acc.n) : 0.0;
    s.amplitude_ratio = acc.n > 0 ? acc.ratio_sum / static_cast<double>(acc.n) : 0.0;
    return s;
}

}  // namespace

ComparisonReport compare_cone(const ScatteringData& data,
                              const std::vector<FieldSnapshot>& snapshots,
                              const RunConfig& config) {
    if (snapshots.empty()) throw InvalidInputError("compare_cone: no snapshots");
    ComparisonReport rep;
    rep.profile_fingerprint = data.profile_fingerprint;

    for (const auto& snap : snapshots) {
        const double t = snap.t;
        if (!(t >= config.t_min_asym))
            throw DomainError("compare_cone: snapshot below t_min_asym");
        Accum acc_thm, acc_eta;
        double max_neg_nu = 0;
        for (std::size_t i = 0; i < snap.x.size(); ++i) {
            const double x = snap.x[i];
            if (std::abs(x / t) > config.cone_c) continue;
            const double lambda0 = -x / (2.0 * t);
            const AsymptoticParams p = asym_params(data, lambda0, t, config.quad_tol);
            max_neg_nu = std::max(max_neg_nu, -p.nu);

            // both conventions from one parameter evaluation; the eta^2 chain
            // carries sqrt(2) times the closed form's modulus and the opposite
            // (4t)^{i nu} sign
            const Complex nu_gamma = -kI * std::exp(ln_gamma(Complex(1.0, p.nu)));
            const Complex base =
                std::exp(Complex(0.0, 2.0 * lambda0 * lambda0 * t) + 2.0 * p.chi_tilde +
                         Complex(0.5 * kPi * p.nu, 0.0) + Complex(0.0, -0.25 * kPi));
            const Complex pref = nu_gamma / (2.0 * std::sqrt(kPi * t));
            const Complex swing = std::exp(Complex(0.0, p.nu) * std::log(4.0 * t));
            CRow3 q_thm, q_eta;
            if (p.gamma0.norm_sq() > 0.0) {
                q_thm = (pref * base * swing) * p.gamma0;
                q_eta = (std::sqrt(2.0) * pref * base / swing) * p.gamma0;
            }
            accumulate(acc_thm, snap.q[i], q_thm);
            accumulate(acc_eta, snap.q[i], q_eta);
        }
        rep.t.push_back(t);
        rep.theorem.push_back(finish(acc_thm, t, max_neg_nu));
        rep.eta2.push_back(finish(acc_eta, t, max_neg_nu));
    }

    // pick the convention by mean phase discrepancy at the latest snapshot
    const std::size_t last = rep.t.size() - 1;
    if (config.phase_convention == "theorem") {
        rep.chosen_convention = "theorem";
    } else if (config.phase_convention == "eta2") {
        rep.chosen_convention = "eta2";
    } else {
        rep.chosen_convention =
            rep.theorem[last].mean_abs_phase <= rep.eta2[last].mean_abs_phase ? "theorem"
                                                                              : "eta2";
    }
    const auto& chosen = rep.chosen_convention == "theorem" ? rep.theorem : rep.eta2;
    for (const auto& s : chosen) {
        rep.e_abs.push_back(s.e_abs);
        rep.e_rel.push_back(s.e_rel);
    }

    // least squares for p in E_abs ~ c T^{-p}
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < rep.t.size(); ++i) {
        if (rep.e_abs[i] > 0) {
            lx.push_back(std::log(rep.t[i]));
            ly.push_back(std::log(rep.e_abs[i]));
        }
    }
    if (lx.size() < 2) {
        rep.degenerate = true;
    } else {
        const double n = static_cast<double>(lx.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        const double denom = n * sxx - sx * sx;
        const double slope = (n * sxy - sx * sy) / denom;
        const double icept = (sy - slope * sx) / n;
        rep.fitted_p = -slope;
        double rss = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            const double r = ly[i] - (icept + slope * lx[i]);
            rss += r * r;
        }
        rep.fit_residual = std::sqrt(rss / n);
    }
    return rep;
}

std::string ComparisonReport::to_json_string() const {
    json j;
    j["t"] = t;
    auto stats = [](const std::vector<ConeStats>& v) {
        json arr = json::array();
        for (const auto& s : v)
            arr.push_back({{"e_abs", s.e_abs},
                           {"e_rel", s.e_rel},
                           {"mean_abs_phase", s.mean_abs_phase},
                           {"amplitude_ratio", s.amplitude_ratio}});
        return arr;
    };
    j["theorem"] = stats(theorem);
    j["eta2"] = stats(eta2);
    j["chosen_convention"] = chosen_convention;
    j["e_abs"] = e_abs;
    j["e_rel"] = e_rel;
    j["fitted_p"] = fitted_p;
    j["fit_residual"] = fit_residual;
    j["degenerate"] = degenerate;
    j["profile_fingerprint"] = profile_fingerprint;
    return j.dump(2) + "\n";
}

}  // namespace manakov
