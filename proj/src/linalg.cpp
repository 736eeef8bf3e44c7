#include "manakov/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

// Solve A X = B for 4x4 complex A, B (partial pivoting, in place).
CMat4 solve4(CMat4 a, CMat4 b) {
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < 4; ++r) {
            double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) throw NumericalError("expm4: singular Pade denominator");
        if (piv != col) {
            for (std::size_t j = 0; j < 4; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(b(col, j), b(piv, j));
            }
        }
        const Complex inv_p = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < 4; ++r) {
            const Complex f = a(r, col) * inv_p;
            if (f == Complex(0.0)) continue;
            for (std::size_t j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < 4; ++j) b(r, j) -= f * b(col, j);
        }
    }
    for (std::size_t col = 4; col-- > 0;) {
        const Complex inv_p = 1.0 / a(col, col);
        for (std::size_t j = 0; j < 4; ++j) {
            Complex s = b(col, j);
            for (std::size_t k = col + 1; k < 4; ++k) s -= a(col, k) * b(k, j);
            b(col, j) = s * inv_p;
        }
    }
    return b;
}

}  // namespace

CMat4 expm4(const CMat4& a_in) {
    if (!a_in.finite()) throw InvalidInputError("expm4: non-finite entry");

    // Pade(13) numerator coefficients.
    static const double b[14] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};

    CMat4 a = a_in;
    int squarings = 0;
    const double n1 = a.norm1();
    if (n1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(n1 / 0.5)));
        const double scale = std::ldexp(1.0, -squarings);
        a = Complex(scale, 0.0) * a;
    }

    const CMat4 ident = CMat4::identity();
    const CMat4 a2 = a * a;
    const CMat4 a4 = a2 * a2;
    const CMat4 a6 = a2 * a4;

    CMat4 u_inner = Complex(b[13], 0) * a6 + Complex(b[11], 0) * a4 + Complex(b[9], 0) * a2;
    CMat4 u = a * (a6 * u_inner + Complex(b[7], 0) * a6 + Complex(b[5], 0) * a4 +
                   Complex(b[3], 0) * a2 + Complex(b[1], 0) * ident);
    CMat4 v_inner = Complex(b[12], 0) * a6 + Complex(b[10], 0) * a4 + Complex(b[8], 0) * a2;
    CMat4 v = a6 * v_inner + Complex(b[6], 0) * a6 + Complex(b[4], 0) * a4 +
              Complex(b[2], 0) * a2 + Complex(b[0], 0) * ident;

    CMat4 r = solve4(v - u, v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

Complex det3(const CMat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

CMat3 adjugate3(const CMat3& m) {
    CMat3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

CMat3 inv3(const CMat3& m, double det_floor) {
    if (!m.finite()) throw InvalidInputError("inv3: non-finite entry");
    const double abs_det = std::abs(det3(m));
    if (!(abs_det > det_floor))
        throw SingularMatrixError("inv3: matrix near singular", abs_det);

    // Elimination on [m | I]; independent of the adjugate closed form used as
    // the test oracle.
    CMat3 a = m;
    CMat3 inv = CMat3::identity();
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < 3; ++r) {
            double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv != col) {
            for (std::size_t j = 0; j < 3; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        }
        const Complex inv_p = 1.0 / a(col, col);
        for (std::size_t j = 0; j < 3; ++j) {
            a(col, j) *= inv_p;
            inv(col, j) *= inv_p;
        }
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col) continue;
            const Complex f = a(r, col);
            if (f == Complex(0.0)) continue;
            for (std::size_t j = 0; j < 3; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Complex det4(const CMat4& m_in) {
    CMat4 a = m_in;
    Complex det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < 4; ++r) {
            double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < 4; ++j) std::swap(a(col, j), a(piv, j));
            det = -det;
        }
        det *= a(col, col);
        const Complex inv_p = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < 4; ++r) {
            const Complex f = a(r, col) * inv_p;
            if (f == Complex(0.0)) continue;
            for (std::size_t j = col; j < 4; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace manakov
