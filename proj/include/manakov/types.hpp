#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace manakov {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

// Row triple. Used for the field (q1,q2,q3) and for the row-valued
// scattering quantities b, gamma, beta12.
struct CRow3 {
    std::array<Complex, 3> v{};

    Complex& operator[](std::size_t i) { return v[i]; }
    const Complex& operator[](std::size_t i) const { return v[i]; }

    double norm_sq() const {
        return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
    }
    double norm() const { return std::sqrt(norm_sq()); }

    CRow3 conj() const { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

    friend CRow3 operator+(const CRow3& a, const CRow3& b) {
        return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
    }
    friend CRow3 operator-(const CRow3& a, const CRow3& b) {
        return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]};
    }
    friend CRow3 operator*(const Complex& s, const CRow3& a) {
        return {s * a.v[0], s * a.v[1], s * a.v[2]};
    }

    CRow3(std::initializer_list<Complex> init) {
        std::size_t i = 0;
        for (const auto& c : init) {
            if (i < 3) v[i++] = c;
        }
    }
    CRow3() = default;

    bool finite() const {
        for (const auto& c : v)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }
};

// <a, b> = sum_j a_j * conj(b_j)
inline Complex dot_conj(const CRow3& a, const CRow3& b) {
    return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2]);
}

struct CMat3 {
    std::array<Complex, 9> m{};

    Complex& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

    static CMat3 identity() {
        CMat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    static CMat3 diag(Complex d0, Complex d1, Complex d2) {
        CMat3 r;
        r(0, 0) = d0;
        r(1, 1) = d1;
        r(2, 2) = d2;
        return r;
    }

    CMat3 dagger() const {
        CMat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (const auto& c : m) s += std::norm(c);
        return std::sqrt(s);
    }

    bool finite() const {
        for (const auto& c : m)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    friend CMat3 operator*(const CMat3& a, const CMat3& b) {
        CMat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Complex s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
                r(i, j) = s;
            }
        return r;
    }
    friend CMat3 operator-(const CMat3& a, const CMat3& b) {
        CMat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
};

// row * mat
inline CRow3 operator*(const CRow3& r, const CMat3& m) {
    CRow3 out;
    for (std::size_t j = 0; j < 3; ++j)
        out[j] = r[0] * m(0, j) + r[1] * m(1, j) + r[2] * m(2, j);
    return out;
}

// mat * column (argument and result hold column entries)
inline CRow3 mul_col(const CMat3& m, const CRow3& c) {
    CRow3 out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = m(i, 0) * c[0] + m(i, 1) * c[1] + m(i, 2) * c[2];
    return out;
}

struct CMat4 {
    std::array<Complex, 16> m{};

    Complex& operator()(std::size_t i, std::size_t j) { return m[4 * i + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m[4 * i + j]; }

    static CMat4 identity() {
        CMat4 r;
        for (std::size_t i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }
    static CMat4 diag(Complex d0, Complex d1, Complex d2, Complex d3) {
        CMat4 r;
        r(0, 0) = d0;
        r(1, 1) = d1;
        r(2, 2) = d2;
        r(3, 3) = d3;
        return r;
    }

    CMat4 dagger() const {
        CMat4 r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    // 1x3 top-right block
    CRow3 block12() const { return {(*this)(0, 1), (*this)(0, 2), (*this)(0, 3)}; }
    // 3x1 bottom-left block (returned as entries)
    CRow3 block21() const { return {(*this)(1, 0), (*this)(2, 0), (*this)(3, 0)}; }
    // 3x3 bottom-right block
    CMat3 block22() const {
        CMat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = (*this)(i + 1, j + 1);
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (const auto& c : m) s += std::norm(c);
        return std::sqrt(s);
    }

    // max column sum of absolute values
    double norm1() const {
        double best = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < 4; ++i) s += std::abs((*this)(i, j));
            if (s > best) best = s;
        }
        return best;
    }

    bool finite() const {
        for (const auto& c : m)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    friend CMat4 operator*(const CMat4& a, const CMat4& b) {
        CMat4 r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Complex s = 0;
                for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
                r(i, j) = s;
            }
        return r;
    }
    friend CMat4 operator+(const CMat4& a, const CMat4& b) {
        CMat4 r;
        for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend CMat4 operator-(const CMat4& a, const CMat4& b) {
        CMat4 r;
        for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend CMat4 operator*(const Complex& s, const CMat4& a) {
        CMat4 r;
        for (std::size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
        return r;
    }
};

inline double frobenius_diff(const CMat4& a, const CMat4& b) { return (a - b).frobenius(); }
inline double frobenius_diff(const CMat3& a, const CMat3& b) { return (a - b).frobenius(); }

}  // namespace manakov
