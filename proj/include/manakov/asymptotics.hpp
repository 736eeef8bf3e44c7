#pragma once

#include <string>
#include <vector>

#include "manakov/scattering.hpp"
#include "manakov/types.hpp"

namespace manakov {

// Sign used for the (4t)^{i nu} factor in the leading-order formula. The two
// candidate derivation routes disagree on it; both are implemented and the
// PDE comparison arbitrates.
enum class PhaseConvention { Theorem, Eta2 };

std::string convention_name(PhaseConvention c);
PhaseConvention convention_from_name(const std::string& s);

// nu = -log(1 + |gamma0|^2) / (2 pi), always <= 0.
double nu_of(const CRow3& gamma0);

// Regularized Cauchy integral of log(1+|gamma|^2) at lambda0:
//   chi = [ I_tail + I_local ] / (2 pi i),
//   I_tail  = int_{-inf}^{lambda0-1} log(1+|gamma(xi)|^2)/(xi-lambda0) dxi,
//   I_local = int_{lambda0-1}^{lambda0} [log(1+|gamma(xi)|^2)
//             - log(1+|gamma(lambda0)|^2)]/(xi-lambda0) dxi.
// Both integrands are real, so the result is purely imaginary. gamma is read
// through the table's cubic interpolant and treated as zero outside it.
// reversed_local flips the orientation of I_local to match the printed form
// of the source decomposition; the default is the algebraically consistent
// orientation (see the comparison report's phase audit).
Complex chi_tilde_of(const ScatteringData& data, double lambda0, double tol = 1e-8,
                     bool reversed_local = false);

// eta = (4t)^{-i nu/2} e^{i lambda0^2 t + chi}
Complex eta_of(double t, double lambda0, double nu, Complex chi);

// beta12 = e^{pi nu/2 - pi i/4} Gamma(1 + i nu) / sqrt(2 pi) * gamma0
CRow3 beta12_of(const CRow3& gamma0, double nu);

struct AsymptoticParams {
    double lambda0 = 0;
    double nu = 0;
    Complex chi_tilde;
    Complex eta;
    CRow3 gamma0;
};

AsymptoticParams asym_params(const ScatteringData& data, double lambda0, double t,
                             double tol = 1e-8);

// Leading-order field at one point. Theorem is the closed-form display taken
// verbatim,
//   q = nu Gamma(i nu) / (2 sqrt(pi t)) (4t)^{+i nu} gamma(lambda0)
//       e^{2 i lambda0^2 t + 2 chi + pi nu/2 - pi i/4},   |q| = sqrt(-nu/2t);
// Eta2 is the same object assembled from its constituent chain
// t^{-1/2}(-i) eta^2 beta12, which is sqrt(2) (4t)^{-2 i nu} times the above,
//   |q| = sqrt(-nu/t). The PDE comparison arbitrates between them and selects
// Eta2 for the reference data. Exactly zero when gamma(lambda0) = 0.
CRow3 leading_order(const ScatteringData& data, double x, double t,
                    PhaseConvention conv = PhaseConvention::Theorem,
                    double t_min = 5.0, double tol = 1e-8);

// Side-by-side evaluation of the closed formula and its constituent chain
// q_B = t^{-1/2} (-i) eta^2 beta12. Reports the modulus gap and componentwise
// phase gaps; when the two (4t)^{i nu} exponents genuinely differ the phase
// gap is 2 nu log(4t) mod 2pi.
struct PhaseAudit {
    CRow3 q_theorem;
    CRow3 q_chain;
    double moduli_gap = 0;                   // | |q_theorem| - |q_chain| |
    std::array<double, 3> phase_gap{};       // arg(q_theorem_j conj(q_chain_j))
    double predicted_exponent_gap = 0;       // 2 nu log(4t) wrapped to (-pi, pi]
};

PhaseAudit phase_convention_audit(const ScatteringData& data, double x, double t,
                                  double t_min = 5.0, double tol = 1e-8);

struct AsymField {
    std::vector<double> x;
    double t = 0;
    std::vector<CRow3> q;
    std::vector<double> lambda0;
    std::vector<double> nu;
    std::vector<char> in_cone;
};

AsymField asym_field(const ScatteringData& data, const std::vector<double>& x_grid,
                     double t, double cone_c, PhaseConvention conv,
                     double t_min = 5.0, double tol = 1e-8);

// CSV schema: x,t,q1_re,q1_im,q2_re,q2_im,q3_re,q3_im,lambda0,nu,in_cone
std::string asym_field_csv(const AsymField& f);

}  // namespace manakov
