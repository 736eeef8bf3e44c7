#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "manakov/errors.hpp"
#include "manakov/special.hpp"
#include "oracles.hpp"

using namespace manakov;

namespace {

Complex gamma_fn(Complex z) { return std::exp(ln_gamma(z)); }

// probabilists' Hermite polynomials
Complex hermite_he(int n, Complex z) {
    Complex h0 = 1.0, h1 = z;
    if (n == 0) return h0;
    if (n == 1) return h1;
    for (int k = 2; k <= n; ++k) {
        const Complex h2 = z * h1 - static_cast<double>(k - 1) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

double connection_residual(Complex a, Complex z) {
    // D_a(z) = G e^{i pi a/2} D_{-a-1}(iz) + G e^{-i pi a/2} D_{-a-1}(-iz),
    // G = Gamma(1+a)/sqrt(2 pi)
    const Complex lhs = pcf_d(PcfOrder(a), z);
    const Complex g = gamma_fn(1.0 + a) / std::sqrt(2.0 * kPi);
    const Complex t1 = g * std::exp(kI * kPi * a * 0.5) * pcf_d(PcfOrder(-a - 1.0), kI * z);
    const Complex t2 =
        g * std::exp(-kI * kPi * a * 0.5) * pcf_d(PcfOrder(-a - 1.0), -kI * z);
    const double scale =
        std::max({std::abs(lhs), std::abs(t1), std::abs(t2), 1e-30});
    return std::abs(lhs - (t1 + t2)) / scale;
}

double recurrence_residual_fd(Complex a, Complex z, double h = 1e-5) {
    // D'(z) + (z/2) D(z) - a D_{a-1}(z), derivative by central difference
    const Complex d_plus = pcf_d(PcfOrder(a), z + h);
    const Complex d_minus = pcf_d(PcfOrder(a), z - h);
    const Complex deriv = (d_plus - d_minus) / (2.0 * h);
    const Complex d0 = pcf_d(PcfOrder(a), z);
    const Complex dm1 = pcf_d(PcfOrder(a - 1.0), z);
    const Complex res = deriv + 0.5 * z * d0 - a * dm1;
    const double scale = std::max({std::abs(deriv), std::abs(0.5 * z * d0),
                                   std::abs(a * dm1), 1e-30});
    return std::abs(res) / scale;
}

}  // namespace

TEST_CASE("ln_gamma classical values") {
    CHECK(std::abs(ln_gamma(Complex(1.0)) - Complex(0.0)) < 1e-14);
    CHECK(std::abs(ln_gamma(Complex(0.5)).real() - 0.5 * std::log(kPi)) < 1e-14);
    CHECK(std::abs(ln_gamma(Complex(0.5)).imag()) < 1e-14);
    // Gamma(5) = 24
    CHECK(std::abs(gamma_fn(Complex(5.0)) - Complex(24.0)) < 1e-12);
}

TEST_CASE("|Gamma(i nu)|^2 equals pi / (nu sinh(pi nu))") {
    for (double nu : {-0.11, -0.55, -1.3, 0.4}) {
        const Complex g = gamma_fn(Complex(0.0, nu));
        const double got = std::norm(g);
        const double want = kPi / (nu * std::sinh(kPi * nu));
        CHECK(std::abs(got - want) < 1e-12 * want);
    }
}

TEST_CASE("Gamma recurrence over the supported region") {
    std::mt19937_64 rng(90210);
    std::uniform_real_distribution<double> dre(-24.0, 24.0), dim(-24.0, 24.0);
    int done = 0;
    while (done < 40) {
        Complex z(dre(rng), dim(rng));
        if (std::abs(z.imag()) < 0.05 && z.real() < 0.5) continue;  // keep off the poles
        if (std::abs(z) < 0.1 || std::abs(z) > 49.0) continue;
        ++done;
        const Complex ratio = std::exp(ln_gamma(z + 1.0) - ln_gamma(z));
        CHECK(std::abs(ratio - z) < 1e-11 * std::max(1.0, std::abs(z)));
    }
}

TEST_CASE("ln_gamma pole errors") {
    CHECK_THROWS_AS((void)ln_gamma(Complex(0.0)), PoleError);
    CHECK_THROWS_AS((void)ln_gamma(Complex(-3.0)), PoleError);
    CHECK(std::abs(reciprocal_gamma(Complex(-3.0))) == 0.0);
}

TEST_CASE("pcf_d at order zero is the Gaussian") {
    const Complex got = pcf_d(PcfOrder(Complex(0.0)), Complex(1.3));
    const double want = std::exp(-1.3 * 1.3 / 4.0);
    CHECK(std::abs(got - Complex(want)) < 1e-12);
}

TEST_CASE("pcf_d reduces to Hermite times Gaussian at integer orders") {
    const Complex zs[] = {Complex(0.4), Complex(1.7, 0.0), Complex(-2.3, 0.4),
                          Complex(5.5, 0.0), Complex(3.0, -2.0), Complex(8.0, 1.0)};
    for (int n = 0; n <= 5; ++n) {
        for (const Complex& z : zs) {
            const Complex want = std::exp(-z * z / 4.0) * hermite_he(n, z);
            const Complex got = pcf_d(PcfOrder(Complex(n, 0.0)), z);
            const double scale = std::max(std::abs(want), 1e-12);
            CHECK(std::abs(got - want) / scale < 1e-9);
        }
    }
}

TEST_CASE("recurrence residual at the reference point") {
    CHECK(recurrence_residual_fd(Complex(0.0, 0.3), Complex(2.0)) < 1e-8);
}

TEST_CASE("connection-formula residual at the reference point") {
    CHECK(connection_residual(Complex(0.0, 0.2), Complex(1.0, 0.5)) < 1e-8);
}

TEST_CASE("branches agree across the switchover annulus") {
    const Complex orders[] = {Complex(0.0, -0.3), Complex(0.5, 0.2),
                              Complex(-0.4, -0.15), Complex(0.0, -1.0)};
    // above the switchover: production (asymptotic, with transport where its
    // own truncation estimate misses) against the still-convergent series
    {
        const double args[] = {0.0, kPi / 3.0, -kPi / 3.0, 0.6 * kPi, -0.6 * kPi};
        for (const Complex& a : orders)
            for (double r : {6.05, 6.2, 6.5})
                for (double th : args) {
                    const Complex z = std::polar(r, th);
                    const Complex prod = pcf_d(PcfOrder(a), z);
                    const Complex ser = detail::pcf_series(a, z).value;
                    const double scale = std::max(std::abs(ser), 1e-30);
                    CHECK(std::abs(prod - ser) / scale < 1e-7);
                }
    }
    // at and below the switchover: series against the independent transported
    // evaluation, on rays where the inward transport is well-posed
    {
        const double args[] = {0.0, kPi / 6.0, -kPi / 5.0};
        for (const Complex& a : orders)
            for (double r : {5.5, 5.8, 6.0})
                for (double th : args) {
                    const Complex z = std::polar(r, th);
                    const Complex ser = detail::pcf_series(a, z).value;
                    const Complex ode = detail::pcf_ode_transport(a, z);
                    const double scale = std::max(std::abs(ser), 1e-30);
                    CHECK(std::abs(ser - ode) / scale < 1e-7);
                }
    }
}

TEST_CASE("ODE transport agrees with the fast paths where both are valid") {
    // series region
    {
        const Complex a(0.3, -0.2), z(4.0, 1.0);
        const Complex fast = detail::pcf_series(a, z).value;
        const Complex slow = detail::pcf_ode_transport(a, z);
        CHECK(std::abs(fast - slow) / std::abs(fast) < 1e-9);
    }
    // asymptotic region
    {
        const Complex a(0.3, -0.2), z(9.0, -3.0);
        const Complex fast = detail::pcf_asymptotic(a, z).value;
        const Complex slow = detail::pcf_ode_transport(a, z);
        CHECK(std::abs(fast - slow) / std::abs(fast) < 1e-9);
    }
}

TEST_CASE("identities hold at large order in the awkward radius band") {
    // The Poincare expansion alone cannot reach tolerance here; these exercise
    // the transported evaluation.
    CHECK(connection_residual(Complex(8.0, 6.0), Complex(7.5, 0.0)) < 1e-8);
    CHECK(connection_residual(Complex(-7.0, 5.0), Complex(8.0, 2.0)) < 1e-8);
    CHECK(recurrence_residual_fd(Complex(6.0, -8.0), Complex(2.5, 0.5)) < 1e-8);
}

TEST_CASE("weber residual diagnostics") {
    CHECK(weber_residual(PcfOrder(Complex(0.0)), Complex(0.7)) <= 1e-6);
    CHECK(weber_residual(PcfOrder(Complex(0.0, 0.3)), Complex(2.0)) <= 1e-6);
    CHECK(weber_residual(PcfOrder(Complex(0.0)), Complex(0.0)) <= 1e-8);
}

TEST_CASE("range guards") {
    CHECK_THROWS_AS(PcfOrder(Complex(10.5, 0.0)), RangeError);
    CHECK_THROWS_AS(PcfOrder(Complex(0.0, -11.0)), RangeError);
    CHECK_THROWS_AS((void)pcf_d(PcfOrder(Complex(0.0)), Complex(31.0)), RangeError);
}
