#include "manakov/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "manakov/errors.hpp"
#include "manakov/linalg.hpp"

namespace manakov {

using nlohmann::json;

CMat4 lax_u(const CRow3& q) {
    CMat4 u;
    for (std::size_t j = 0; j < 3; ++j) {
        u(0, j + 1) = kI * q[j];
        u(j + 1, 0) = kI * std::conj(q[j]);
    }
    return u;
}

CMat4 lax_v(const CRow3& q, const CRow3& q_x, double lambda) {
    const CMat4 u = lax_u(q);
    const CMat4 ux = lax_u(q_x);
    const CMat4 sigma = CMat4::diag(-1.0, 1.0, 1.0, 1.0);
    return Complex(lambda) * u + (0.5 * kI) * ((ux + u * u) * sigma);
}

CMat4 LaxAssembly::u_at(double x) const { return lax_u(profile.eval(x)); }

LaxAssembly assemble_lax(const InitialProfile& profile) {
    profile.validate();
    return LaxAssembly{profile};
}

namespace {

CMat4 exp_i_lambda_sigma(double phase) {
    // exp(i*phase*sigma), sigma = diag(-1,1,1,1)
    const Complex em = std::polar(1.0, -phase);
    const Complex ep = std::polar(1.0, phase);
    return CMat4::diag(em, ep, ep, ep);
}

// One frozen-midpoint step of psi' = (i*lambda*sigma + U) psi. A vanishing
// potential gets the exact diagonal exponential, which keeps the zero-profile
// off-diagonal entries exactly zero.
CMat4 step_propagator(const LaxAssembly& lax, double lambda, double x_mid, double h) {
    CMat4 gen = lax.u_at(x_mid);
    if (gen.frobenius() == 0.0) return exp_i_lambda_sigma(lambda * h);
    const Complex il(0.0, lambda);
    gen(0, 0) -= il;
    gen(1, 1) += il;
    gen(2, 2) += il;
    gen(3, 3) += il;
    return expm4(Complex(h) * gen);
}

}  // namespace

std::vector<CMat4> jost_mu_minus(const LaxAssembly& lax, double lambda,
                                 const std::vector<double>& x_grid) {
    if (x_grid.size() < 2) throw InvalidInputError("jost_mu_minus: need at least 2 nodes");
    double h_max = 0;
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        const double h = x_grid[i] - x_grid[i - 1];
        if (!(h > 0)) throw InvalidInputError("jost_mu_minus: grid not increasing");
        h_max = std::max(h_max, h);
    }
    if (h_max * std::abs(lambda) > 0.25)
        throw ResolutionError("jost_mu_minus: grid too coarse for this lambda");

    std::vector<CMat4> mu(x_grid.size());
    // psi gauge: psi(x) = mu(x) e^{i lambda x sigma}
    CMat4 psi = exp_i_lambda_sigma(lambda * x_grid.front());
    mu[0] = CMat4::identity();
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        const double h = x_grid[i] - x_grid[i - 1];
        const double x_mid = 0.5 * (x_grid[i] + x_grid[i - 1]);
        psi = step_propagator(lax, lambda, x_mid, h) * psi;
        mu[i] = psi * exp_i_lambda_sigma(-lambda * x_grid[i]);
    }
    return mu;
}

CMat4 scattering_matrix(const LaxAssembly& lax, double lambda, double x_step) {
    if (!(x_step > 0)) throw InvalidInputError("scattering_matrix: bad step");
    if (lax.profile.is_zero()) return CMat4::identity();  // exact free limit
    const double L = lax.profile.support_cutoff;
    const long n = std::lround(std::ceil(2.0 * L / x_step));
    const double h = 2.0 * L / static_cast<double>(n);
    if (h * std::abs(lambda) > 0.25)
        throw ResolutionError("scattering_matrix: step too coarse for this lambda");

    CMat4 psi = exp_i_lambda_sigma(-lambda * L);  // psi(-L) for mu(-L) = I
    for (long i = 0; i < n; ++i) {
        const double x_mid = -L + (static_cast<double>(i) + 0.5) * h;
        psi = step_propagator(lax, lambda, x_mid, h) * psi;
    }
    // s = e^{-i lambda L sigma} mu(L) e^{i lambda L sigma} = e^{-i lambda L sigma} psi(L)
    return exp_i_lambda_sigma(-lambda * L) * psi;
}

ReflectionBlocks reflection_gamma(const CMat4& s, double det_floor) {
    ReflectionBlocks r;
    r.a = s.block22();
    r.b = s.block12();
    const double abs_det = std::abs(det3(r.a));
    if (!(abs_det > det_floor))
        throw NonGenericDataError("reflection_gamma: det a too small (non-generic data)",
                                  abs_det);
    r.gamma = r.b * inv3(r.a, det_floor);
    return r;
}

ScatteringData scattering_grid(const LaxAssembly& lax, double lambda_min,
                               double lambda_max, int n, double x_step, int threads) {
    if (n < 16) throw InvalidInputError("scattering_grid: need at least 16 nodes");
    if (!(lambda_max > lambda_min)) throw InvalidInputError("scattering_grid: bad range");

    ScatteringData out;
    out.lambda.resize(n);
    out.a.resize(n);
    out.b.resize(n);
    out.gamma.resize(n);
    out.unitarity_defect.resize(n);
    out.det_s_defect.resize(n);
    out.x_step = x_step;
    out.tail_bound = lax.profile.tail_bound();
    out.profile_fingerprint = profile_fingerprint(lax.profile);
    for (int i = 0; i < n; ++i)
        out.lambda[i] =
            lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (n - 1);

    int n_workers = threads > 0 ? threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min(n_workers, n);

    std::vector<std::pair<double, std::string>> failures(n);
    std::vector<char> failed(n, 0);

    auto worker = [&](int first) {
        for (int i = first; i < n; i += n_workers) {
            try {
                const CMat4 s = scattering_matrix(lax, out.lambda[i], x_step);
                const CMat4 gram = s.dagger() * s;
                out.unitarity_defect[i] = frobenius_diff(gram, CMat4::identity());
                out.det_s_defect[i] = std::abs(det4(s) - Complex(1.0));
                ReflectionBlocks rb = reflection_gamma(s);
                out.a[i] = rb.a;
                out.b[i] = rb.b;
                out.gamma[i] = rb.gamma;
            } catch (const std::exception& e) {
                failed[i] = 1;
                failures[i] = {out.lambda[i], e.what()};
            }
        }
    };

    if (n_workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::ostringstream errs;
    bool any_failed = false;
    for (int i = 0; i < n; ++i) {
        if (failed[i]) {
            if (any_failed) errs << "; ";
            errs << "lambda=" << failures[i].first << ": " << failures[i].second;
            any_failed = true;
        }
    }
    if (any_failed) throw NumericalError("scattering_grid: " + errs.str());

    double min_det = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) min_det = std::min(min_det, std::abs(det3(out.a[i])));
    out.min_abs_det_a = min_det;
    return out;
}

CRow3 gamma_at(const ScatteringData& data, double lambda0) {
    const auto& xs = data.lambda;
    if (xs.size() < 8) throw InvalidInputError("gamma_at: table too small");
    if (lambda0 < xs.front() || lambda0 > xs.back())
        throw RangeError("gamma_at: lambda0 outside tabulated range");

    auto it = std::lower_bound(xs.begin(), xs.end(), lambda0);
    if (it != xs.end() && *it == lambda0)
        return data.gamma[static_cast<std::size_t>(it - xs.begin())];

    // Local degree-7 Lagrange stencil centered on the query interval. The
    // reflection data of the sech family carries a phase feature near
    // lambda = 0 at an effective rate of ~6 rad per unit; at the default
    // 1/32 node spacing a cubic piece bottoms out near 2e-5 there, so the
    // stencil carries four extra points to keep interpolation below 1e-6.
    const std::size_t n = xs.size();
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t w = hi >= 4 ? hi - 4 : 0;
    if (w + 8 > n) w = n - 8;

    double basis[8];
    for (int j = 0; j < 8; ++j) {
        double num = 1.0, den = 1.0;
        for (int k = 0; k < 8; ++k) {
            if (k == j) continue;
            num *= lambda0 - xs[w + k];
            den *= xs[w + j] - xs[w + k];
        }
        basis[j] = num / den;
    }

    CRow3 out;
    for (int comp = 0; comp < 3; ++comp) {
        Complex acc = 0.0;
        for (int j = 0; j < 8; ++j) acc += basis[j] * data.gamma[w + j][comp];
        out[comp] = acc;
    }
    return out;
}

namespace {

json complex_array_re(const std::vector<CRow3>& rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({r[0].real(), r[1].real(), r[2].real()});
    return arr;
}
json complex_array_im(const std::vector<CRow3>& rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({r[0].imag(), r[1].imag(), r[2].imag()});
    return arr;
}

}  // namespace

std::string ScatteringData::to_json_string() const {
    json j;
    j["lambda"] = lambda;
    json are = json::array(), aim = json::array();
    for (const auto& m : a) {
        json re = json::array(), im = json::array();
        for (const auto& c : m.m) {
            re.push_back(c.real());
            im.push_back(c.imag());
        }
        are.push_back(re);
        aim.push_back(im);
    }
    j["a_re"] = are;
    j["a_im"] = aim;
    j["b_re"] = complex_array_re(b);
    j["b_im"] = complex_array_im(b);
    j["gamma_re"] = complex_array_re(gamma);
    j["gamma_im"] = complex_array_im(gamma);
    j["defects"] = {{"unitarity", unitarity_defect},
                    {"det_s", det_s_defect},
                    {"min_abs_det_a", min_abs_det_a},
                    {"tail_bound", tail_bound},
                    {"x_step", x_step}};
    j["profile_fingerprint"] = profile_fingerprint;
    return j.dump(2) + "\n";
}

ScatteringData ScatteringData::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInputError(std::string("scattering json: ") + e.what());
    }
    try {
        ScatteringData d;
        d.lambda = j.at("lambda").get<std::vector<double>>();
        const std::size_t n = d.lambda.size();
        auto load_rows = [n](const json& re, const json& im) {
            std::vector<CRow3> rows(n);
            for (std::size_t i = 0; i < n; ++i)
                for (int c = 0; c < 3; ++c)
                    rows[i][c] = Complex(re.at(i).at(c).get<double>(),
                                         im.at(i).at(c).get<double>());
            return rows;
        };
        d.b = load_rows(j.at("b_re"), j.at("b_im"));
        d.gamma = load_rows(j.at("gamma_re"), j.at("gamma_im"));
        d.a.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < 9; ++k)
                d.a[i].m[k] = Complex(j.at("a_re").at(i).at(k).get<double>(),
                                      j.at("a_im").at(i).at(k).get<double>());
        d.unitarity_defect = j.at("defects").at("unitarity").get<std::vector<double>>();
        d.det_s_defect = j.at("defects").at("det_s").get<std::vector<double>>();
        d.min_abs_det_a = j.at("defects").at("min_abs_det_a").get<double>();
        d.tail_bound = j.at("defects").at("tail_bound").get<double>();
        d.x_step = j.at("defects").at("x_step").get<double>();
        d.profile_fingerprint = j.at("profile_fingerprint").get<std::string>();
        return d;
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("scattering json: ") + e.what());
    }
}

}  // namespace manakov
