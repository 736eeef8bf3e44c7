#pragma once

#include "manakov/types.hpp"

namespace manakov {

// Log-Gamma, Lanczos approximation for Re z >= 0.5 and reflection otherwise.
// Relative accuracy ~1e-13 or better for |z| <= 50. All downstream use goes
// through exp(ln_gamma(.)), so the reflection branch's additive 2*pi*i
// ambiguity far off-axis is harmless; on-axis and near-axis values are
// principal. Throws PoleError at non-positive integers.
Complex ln_gamma(Complex z);

// 1/Gamma(z); zero at the poles.
Complex reciprocal_gamma(Complex z);

// Parabolic-cylinder order. Supported box |Re a| <= 10, |Im a| <= 10.
struct PcfOrder {
    Complex a;
    explicit PcfOrder(Complex a_);
};

// Parabolic cylinder function D_a(z) for |z| <= 30, target 1e-9 relative.
// Maclaurin (Kummer) series for |z| <= 6, Poincare asymptotic expansion with
// sector selection beyond. Where the asymptotic expansion's own optimal-
// truncation estimate misses the target (large |a|, moderate |z|), the value
// is transported inward along the ray by Taylor integration of Weber's
// equation from a radius where the expansion is reliable.
Complex pcf_d(const PcfOrder& order, Complex z);

// |D_a''(z) + (a + 1/2 - z^2/4) D_a(z)| with a Richardson-extrapolated central
// second difference (base step 2e-3). Diagnostic magnitude.
double weber_residual(const PcfOrder& order, Complex z);

namespace detail {
struct PcfEval {
    Complex value;
    double abs_error_estimate;
    double scale;  // magnitude of the largest contribution, for cancellation checks
};
PcfEval pcf_series(Complex a, Complex z);
PcfEval pcf_asymptotic(Complex a, Complex z);
Complex pcf_ode_transport(Complex a, Complex z);
}  // namespace detail

}  // namespace manakov
