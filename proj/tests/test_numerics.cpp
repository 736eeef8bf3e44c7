#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "manakov/errors.hpp"
#include "manakov/fft.hpp"
#include "manakov/linalg.hpp"
#include "manakov/quadrature.hpp"
#include "oracles.hpp"

using namespace manakov;

namespace {

CMat4 random_mat4(std::mt19937_64& rng, double scale) {
    CMat4 m;
    for (auto& c : m.m) c = oracles::rand_complex(rng, scale);
    return m;
}

CMat3 random_mat3(std::mt19937_64& rng, double scale) {
    CMat3 m;
    for (auto& c : m.m) c = oracles::rand_complex(rng, scale);
    return m;
}

}  // namespace

TEST_CASE("expm4 identity and diagonal cases") {
    CHECK(frobenius_diff(expm4(CMat4{}), CMat4::identity()) < 1e-15);

    const CMat4 d = CMat4::diag(Complex(0, -kPi), Complex(0, kPi), Complex(0, kPi),
                                Complex(0, kPi));
    const CMat4 want = CMat4::diag(-1.0, -1.0, -1.0, -1.0);
    CHECK(frobenius_diff(expm4(d), want) < 1e-12);
}

TEST_CASE("expm4 matches order-20 Taylor oracle on a Lax step generator") {
    // h (i lambda sigma + U) for h = 0.01, lambda = 1, constant q = (0.3, 0, 0)
    const double h = 0.01, lambda = 1.0;
    CMat4 gen;
    gen(0, 1) = kI * 0.3;
    gen(1, 0) = kI * 0.3;
    gen(0, 0) = Complex(0, -lambda);
    gen(1, 1) = gen(2, 2) = gen(3, 3) = Complex(0, lambda);
    const CMat4 a = Complex(h) * gen;
    CHECK(frobenius_diff(expm4(a), oracles::expm_taylor20(a)) < 1e-12);
}

TEST_CASE("expm4 inverse and similarity properties") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        const CMat4 a = random_mat4(rng, 0.8);
        CHECK(frobenius_diff(expm4(a) * expm4(Complex(-1.0) * a), CMat4::identity()) <
              1e-10);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const CMat4 a = random_mat4(rng, 0.5);
        // well-conditioned similarity: identity plus a small perturbation
        CMat4 p = CMat4::identity();
        const CMat4 noise = random_mat4(rng, 0.2);
        p = p + noise;
        // invert p by solving with expm machinery: use det4 guard then Gauss via inv of blocks
        // simpler: p_inv from the Neumann-like direct elimination through det4/adj is not
        // exposed for 4x4, so check the similarity identity in solved form:
        // expm4(p a p^{-1}) p = p expm4(a)
        // build p_inv numerically through LU in test code
        CMat4 p_inv;
        {
            // Gauss-Jordan
            CMat4 m = p;
            p_inv = CMat4::identity();
            for (int col = 0; col < 4; ++col) {
                int piv = col;
                double best = std::abs(m(col, col));
                for (int r = col + 1; r < 4; ++r)
                    if (std::abs(m(r, col)) > best) {
                        best = std::abs(m(r, col));
                        piv = r;
                    }
                REQUIRE(best > 1e-8);
                if (piv != col)
                    for (int j = 0; j < 4; ++j) {
                        std::swap(m(col, j), m(piv, j));
                        std::swap(p_inv(col, j), p_inv(piv, j));
                    }
                const Complex ip = 1.0 / m(col, col);
                for (int j = 0; j < 4; ++j) {
                    m(col, j) *= ip;
                    p_inv(col, j) *= ip;
                }
                for (int r = 0; r < 4; ++r) {
                    if (r == col) continue;
                    const Complex f = m(r, col);
                    for (int j = 0; j < 4; ++j) {
                        m(r, j) -= f * m(col, j);
                        p_inv(r, j) -= f * p_inv(col, j);
                    }
                }
            }
        }
        const CMat4 a_sim = p * a * p_inv;
        CHECK(frobenius_diff(expm4(a_sim), p * expm4(a) * p_inv) < 1e-10);
    }
}

TEST_CASE("expm4 rejects non-finite input") {
    CMat4 bad;
    bad(1, 2) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(expm4(bad), InvalidInputError);
}

TEST_CASE("inv3 identity and diagonal cases") {
    CHECK(frobenius_diff(inv3(CMat3::identity()), CMat3::identity()) < 1e-15);
    const CMat3 d = CMat3::diag(2.0, kI, -1.0);
    const CMat3 want = CMat3::diag(0.5, -kI, -1.0);
    CHECK(frobenius_diff(inv3(d), want) < 1e-15);
}

TEST_CASE("inv3 matches adjugate oracle and satisfies m * inv = I") {
    std::mt19937_64 rng(777);
    int accepted = 0;
    while (accepted < 25) {
        const CMat3 m = random_mat3(rng, 1.0);
        const Complex det = det3(m);
        if (std::abs(det) < 0.3) continue;  // keep well-conditioned draws
        ++accepted;
        const CMat3 inv = inv3(m);
        CHECK(frobenius_diff(m * inv, CMat3::identity()) < 1e-10);

        CMat3 adj_inv = adjugate3(m);
        for (auto& c : adj_inv.m) c /= det;
        CHECK(frobenius_diff(inv, adj_inv) < 1e-12);

        CHECK(frobenius_diff(inv3(inv3(m)), m) < 1e-10);
    }
}

TEST_CASE("inv3 near-singular carries |det|") {
    CMat3 m = CMat3::diag(1.0, 1.0, 0.0);
    try {
        (void)inv3(m);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.abs_det <= 1e-12);
    }
}

TEST_CASE("quad_adaptive trivial integrals") {
    auto lin = [](double x) { return Complex(x, 0.0); };
    const QuadResult r1 = quad_adaptive(lin, 0.0, 1.0, 1e-12);
    CHECK(std::abs(r1.value.real() - 0.5) < 1e-12);

    auto expf = [](double x) { return Complex(std::exp(x), 0.0); };
    const QuadResult r2 =
        quad_adaptive(expf, -std::numeric_limits<double>::infinity(), 0.0, 1e-10);
    CHECK(std::abs(r2.value.real() - 1.0) < 1e-9);
}

TEST_CASE("quad_adaptive semi-infinite log integrand vs dense Simpson oracle") {
    auto f = [](double xi) {
        const double s = 1.0 / std::cosh(xi);
        return Complex(std::log1p(s * s) / xi, 0.0);
    };
    const QuadResult got =
        quad_adaptive(f, -std::numeric_limits<double>::infinity(), -1.0, 1e-10);
    // integrand decays like 4 e^{2 xi}/xi; [-60, -1] truncates below 1e-52
    const double want = oracles::simpson_dense(
        [](double xi) {
            const double s = 1.0 / std::cosh(xi);
            return std::log1p(s * s) / xi;
        },
        -60.0, -1.0, 1000000);
    CHECK(std::abs(got.value.real() - want) < 1e-8);
}

TEST_CASE("quad_adaptive is linear within combined tolerance") {
    auto f = [](double x) { return Complex(std::sin(3 * x), std::cos(x)); };
    auto g = [](double x) { return Complex(std::exp(-x * x), x); };
    const Complex alpha(2.0, -1.0), beta(0.5, 3.0);
    auto combo = [&](double x) { return alpha * f(x) + beta * g(x); };
    const QuadResult rf = quad_adaptive(f, -2.0, 1.5, 1e-11);
    const QuadResult rg = quad_adaptive(g, -2.0, 1.5, 1e-11);
    const QuadResult rc = quad_adaptive(combo, -2.0, 1.5, 1e-11);
    CHECK(std::abs(rc.value - (alpha * rf.value + beta * rg.value)) < 1e-9);
}

TEST_CASE("quad_adaptive budget exhaustion carries the best estimate") {
    // sharply peaked integrand with an impossible budget
    auto f = [](double x) { return Complex(1.0 / (1e-8 + x * x), 0.0); };
    try {
        (void)quad_adaptive(f, -1.0, 1.0, 1e-14, 200);
        FAIL("expected AccuracyError");
    } catch (const AccuracyError& e) {
        CHECK(e.error_estimate > 0);
        CHECK(std::isfinite(e.best_value_re));
    }
}

TEST_CASE("fft impulse, roundtrip, Parseval, and length guard") {
    std::vector<Complex> impulse(16);
    impulse[0] = 1.0;
    const auto spec = fft(impulse);
    for (const auto& c : spec) CHECK(std::abs(c - Complex(1.0)) < 1e-14);

    std::mt19937_64 rng(4242);
    std::vector<Complex> v(256);
    for (auto& c : v) c = oracles::rand_complex(rng);
    const auto back = ifft(fft(v));
    double max_diff = 0, norm_v = 0, norm_hat = 0;
    const auto hat = fft(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(back[i] - v[i]));
        norm_v += std::norm(v[i]);
        norm_hat += std::norm(hat[i]);
    }
    CHECK(max_diff < 1e-12);
    CHECK(std::abs(norm_v - norm_hat / static_cast<double>(v.size())) <
          1e-12 * norm_v);

    std::vector<Complex> bad(15);
    CHECK_THROWS_AS((void)fft(bad), InvalidInputError);
}
