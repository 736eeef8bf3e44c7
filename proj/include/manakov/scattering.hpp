#pragma once

#include <string>
#include <vector>

#include "manakov/profile.hpp"
#include "manakov/types.hpp"

namespace manakov {

// x-part of the Lax pair at t = 0:  psi_x = (i*lambda*sigma + U(x)) psi,
// sigma = diag(-1,1,1,1), U anti-Hermitian with top-right row block i*q and
// bottom-left column block i*q^dagger. The scale and signs are pinned by the
// zero-curvature identity against the evolution equation (tested).
struct LaxAssembly {
    InitialProfile profile;
    CMat4 sigma() const { return CMat4::diag(-1.0, 1.0, 1.0, 1.0); }
    CMat4 u_at(double x) const;
};

LaxAssembly assemble_lax(const InitialProfile& profile);

// U built from field values; V = lambda*U + i(U_x + U^2) sigma / 2.
CMat4 lax_u(const CRow3& q);
CMat4 lax_v(const CRow3& q, const CRow3& q_x, double lambda);

// Jost solution mu_-(x; lambda) with mu_-(x_grid.front()) = I, advanced by the
// frozen-midpoint exponential propagator in the psi gauge. Second order in the
// grid spacing; requires max step * |lambda| <= 0.25.
std::vector<CMat4> jost_mu_minus(const LaxAssembly& lax, double lambda,
                                 const std::vector<double>& x_grid);

// s(lambda) from the truncated line [-L, L], L = profile.support_cutoff.
CMat4 scattering_matrix(const LaxAssembly& lax, double lambda, double x_step = 1e-3);

struct ReflectionBlocks {
    CMat3 a;      // lower-right 3x3 block of s
    CRow3 b;      // top-right 1x3 block of s
    CRow3 gamma;  // b a^{-1}
};

ReflectionBlocks reflection_gamma(const CMat4& s, double det_floor = 1e-12);

struct ScatteringData {
    std::vector<double> lambda;
    std::vector<CMat3> a;
    std::vector<CRow3> b;
    std::vector<CRow3> gamma;
    std::vector<double> unitarity_defect;  // ||s^dag s - I||_F per lambda
    std::vector<double> det_s_defect;      // |det s - 1| per lambda
    double min_abs_det_a = 0.0;
    double tail_bound = 0.0;  // truncated-profile mass outside [-L, L]
    double x_step = 0.0;
    std::string profile_fingerprint;

    std::string to_json_string() const;
    static ScatteringData from_json_string(const std::string& text);
};

// Tabulate the grid; lambda nodes are independent and evaluated on
// `threads` workers (0 = hardware concurrency). Output is identical for any
// thread count: each worker writes only its own slots.
ScatteringData scattering_grid(const LaxAssembly& lax, double lambda_min,
                               double lambda_max, int n, double x_step = 1e-3,
                               int threads = 0);

// Componentwise cubic interpolation of gamma at lambda0.
CRow3 gamma_at(const ScatteringData& data, double lambda0);

}  // namespace manakov
