#include "manakov/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "manakov/errors.hpp"
#include "manakov/io_util.hpp"
#include "manakov/quadrature.hpp"
#include "manakov/special.hpp"

namespace manakov {

std::string convention_name(PhaseConvention c) {
    return c == PhaseConvention::Theorem ? "theorem" : "eta2";
}

PhaseConvention convention_from_name(const std::string& s) {
    if (s == "theorem") return PhaseConvention::Theorem;
    if (s == "eta2") return PhaseConvention::Eta2;
    throw InvalidInputError("unknown phase convention '" + s + "'");
}

double nu_of(const CRow3& gamma0) {
    if (!gamma0.finite()) throw InvalidInputError("nu_of: non-finite gamma");
    return -std::log1p(gamma0.norm_sq()) / (2.0 * kPi);
}

namespace {

// log(1 + |gamma(xi)|^2) through the interpolant, zero outside the table.
double log_weight(const ScatteringData& data, double xi) {
    if (xi < data.lambda.front() || xi > data.lambda.back()) return 0.0;
    return std::log1p(gamma_at(data, xi).norm_sq());
}

}  // namespace

Complex chi_tilde_of(const ScatteringData& data, double lambda0, double tol,
                     bool reversed_local) {
    if (data.lambda.size() < 4) throw InvalidInputError("chi_tilde_of: table too small");
    if (lambda0 < data.lambda.front() || lambda0 > data.lambda.back())
        throw RangeError("chi_tilde_of: lambda0 outside tabulated range");
    if (lambda0 - 1.0 < data.lambda.front())
        throw RangeError("chi_tilde_of: [lambda0-1, lambda0] not fully tabulated");

    const double g0 = log_weight(data, lambda0);
    // derivative of the weight at lambda0, for the removable point
    const double dg0 =
        (log_weight(data, lambda0 + 1e-6) - log_weight(data, lambda0 - 1e-6)) / 2e-6;

    auto tail = [&](double xi) -> Complex {
        return Complex(log_weight(data, xi) / (xi - lambda0), 0.0);
    };
    auto local = [&](double xi) -> Complex {
        const double d = xi - lambda0;
        if (std::abs(d) < 1e-12) return Complex(dg0, 0.0);
        return Complex((log_weight(data, xi) - g0) / d, 0.0);
    };

    const QuadResult i_tail = quad_adaptive(tail, -std::numeric_limits<double>::infinity(),
                                            lambda0 - 1.0, tol);
    QuadResult i_local = quad_adaptive(local, lambda0 - 1.0, lambda0, tol);
    double local_value = i_local.value.real();
    if (reversed_local) local_value = -local_value;

    // division by 2 pi i of a real bracket: purely imaginary by construction
    return Complex(0.0, -(i_tail.value.real() + local_value) / (2.0 * kPi));
}

Complex eta_of(double t, double lambda0, double nu, Complex chi) {
    if (!(t > 0)) throw DomainError("eta_of: t must be positive");
    const Complex exponent =
        Complex(0.0, -0.5 * nu) * std::log(4.0 * t) +
        Complex(0.0, lambda0 * lambda0 * t) + chi;
    return std::exp(exponent);
}

CRow3 beta12_of(const CRow3& gamma0, double nu) {
    if (!gamma0.finite()) throw InvalidInputError("beta12_of: non-finite gamma");
    // nu Gamma(i nu) = -i Gamma(1 + i nu); finite through nu -> 0
    const Complex g1 = std::exp(ln_gamma(Complex(1.0, nu)));
    const Complex coef = std::exp(Complex(0.5 * kPi * nu, 0.0)) *
                         std::polar(1.0, -0.25 * kPi) * g1 / std::sqrt(2.0 * kPi);
    return coef * gamma0;
}

AsymptoticParams asym_params(const ScatteringData& data, double lambda0, double t,
                             double tol) {
    AsymptoticParams p;
    p.lambda0 = lambda0;
    p.gamma0 = gamma_at(data, lambda0);
    p.nu = nu_of(p.gamma0);
    p.chi_tilde = chi_tilde_of(data, lambda0, tol);
    p.eta = eta_of(t, lambda0, p.nu, p.chi_tilde);
    return p;
}

namespace {

// Theorem: the closed-form display taken verbatim,
//   q = nu Gamma(i nu)/(2 sqrt(pi t)) (4t)^{+i nu} gamma0 e^{...},
// whose modulus collapses to sqrt(-nu/2t).
// Eta2: the same quantity assembled from its constituents,
//   q = t^{-1/2} (-i) eta^2 beta12
//     = nu Gamma(i nu)/sqrt(2 pi t) (4t)^{-i nu} gamma0 e^{...},
// i.e. sqrt(2) larger in modulus and with the opposite (4t)^{i nu} sign.
// The two differ by exactly sqrt(2) (4t)^{-2 i nu}; the evolution comparison
// arbitrates (it selects Eta2 for the reference data; see the report).
CRow3 leading_order_from_params(const AsymptoticParams& p, double t,
                                PhaseConvention conv) {
    if (p.gamma0.norm_sq() == 0.0) return {};
    const bool theorem = conv == PhaseConvention::Theorem;
    const double sgn = theorem ? 1.0 : -1.0;
    // nu Gamma(i nu) = -i Gamma(1 + i nu)
    const Complex nu_gamma = -kI * std::exp(ln_gamma(Complex(1.0, p.nu)));
    const Complex phase =
        std::exp(Complex(0.0, sgn * p.nu) * std::log(4.0 * t) +
                 Complex(0.0, 2.0 * p.lambda0 * p.lambda0 * t) + 2.0 * p.chi_tilde +
                 Complex(0.5 * kPi * p.nu, 0.0) + Complex(0.0, -0.25 * kPi));
    const double denom = theorem ? 2.0 * std::sqrt(kPi * t) : std::sqrt(2.0 * kPi * t);
    return ((nu_gamma / denom) * phase) * p.gamma0;
}

}  // namespace

CRow3 leading_order(const ScatteringData& data, double x, double t,
                    PhaseConvention conv, double t_min, double tol) {
    if (!(t >= t_min)) throw DomainError("leading_order: t below t_min");
    const double lambda0 = -x / (2.0 * t);
    const AsymptoticParams p = asym_params(data, lambda0, t, tol);
    return leading_order_from_params(p, t, conv);
}

PhaseAudit phase_convention_audit(const ScatteringData& data, double x, double t,
                                  double t_min, double tol) {
    if (!(t >= t_min)) throw DomainError("phase_convention_audit: t below t_min");
    const double lambda0 = -x / (2.0 * t);
    const AsymptoticParams p = asym_params(data, lambda0, t, tol);

    PhaseAudit audit;
    audit.q_theorem = leading_order_from_params(p, t, PhaseConvention::Theorem);
    const CRow3 beta = beta12_of(p.gamma0, p.nu);
    const Complex chain_coef = (1.0 / std::sqrt(t)) * (-kI) * p.eta * p.eta;
    audit.q_chain = chain_coef * beta;

    audit.moduli_gap = std::abs(audit.q_theorem.norm() - audit.q_chain.norm());
    for (int j = 0; j < 3; ++j) {
        const Complex prod = audit.q_theorem[j] * std::conj(audit.q_chain[j]);
        audit.phase_gap[j] = std::abs(prod) > 0 ? std::arg(prod) : 0.0;
    }
    double gap = 2.0 * p.nu * std::log(4.0 * t);
    gap = std::remainder(gap, 2.0 * kPi);
    audit.predicted_exponent_gap = gap;
    return audit;
}

AsymField asym_field(const ScatteringData& data, const std::vector<double>& x_grid,
                     double t, double cone_c, PhaseConvention conv, double t_min,
                     double tol) {
    if (!(t >= t_min)) throw DomainError("asym_field: t below t_min");
    AsymField f;
    f.t = t;
    f.x = x_grid;
    f.q.resize(x_grid.size());
    f.lambda0.resize(x_grid.size());
    f.nu.resize(x_grid.size());
    f.in_cone.resize(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        const double lambda0 = -x / (2.0 * t);
        const AsymptoticParams p = asym_params(data, lambda0, t, tol);
        f.q[i] = leading_order_from_params(p, t, conv);
        f.lambda0[i] = lambda0;
        f.nu[i] = p.nu;
        f.in_cone[i] = std::abs(x / t) <= cone_c ? 1 : 0;
    }
    return f;
}

std::string asym_field_csv(const AsymField& f) {
    std::ostringstream out;
    out << "x,t,q1_re,q1_im,q2_re,q2_im,q3_re,q3_im,lambda0,nu,in_cone\n";
    for (std::size_t i = 0; i < f.x.size(); ++i) {
        out << format_double(f.x[i]) << ',' << format_double(f.t);
        for (int j = 0; j < 3; ++j)
            out << ',' << format_double(f.q[i][j].real()) << ','
                << format_double(f.q[i][j].imag());
        out << ',' << format_double(f.lambda0[i]) << ',' << format_double(f.nu[i]) << ','
            << (f.in_cone[i] ? '1' : '0') << '\n';
    }
    return out.str();
}

}  // namespace manakov
