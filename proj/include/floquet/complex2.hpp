#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace floquet {

using complexd = std::complex<double>;

// Two-component complex amplitude (spinor value at one point / one mode).
struct Vec2c {
    complexd a{0.0, 0.0};
    complexd b{0.0, 0.0};

    double norm_sq() const { return std::norm(a) + std::norm(b); }
    double norm() const { return std::sqrt(norm_sq()); }

    Vec2c operator+(const Vec2c& o) const { return {a + o.a, b + o.b}; }
    Vec2c operator-(const Vec2c& o) const { return {a - o.a, b - o.b}; }
    Vec2c operator*(complexd s) const { return {a * s, b * s}; }
    Vec2c operator*(double s) const { return {a * s, b * s}; }
};

inline Vec2c operator*(complexd s, const Vec2c& v) { return v * s; }

// <u, v> with the convention conj(u) . v
inline complexd dot(const Vec2c& u, const Vec2c& v) {
    return std::conj(u.a) * v.a + std::conj(u.b) * v.b;
}

// 2x2 complex matrix, row-major: [[m00 m01],[m10 m11]].
struct Mat2c {
    complexd m00{0.0, 0.0}, m01{0.0, 0.0};
    complexd m10{0.0, 0.0}, m11{0.0, 0.0};

    static Mat2c identity() { return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }
    static Mat2c diag(complexd d0, complexd d1) { return {d0, {0.0, 0.0}, {0.0, 0.0}, d1}; }
    static Mat2c from_columns(const Vec2c& c0, const Vec2c& c1) {
        return {c0.a, c1.a, c0.b, c1.b};
    }

    Mat2c operator*(const Mat2c& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Vec2c operator*(const Vec2c& v) const {
        return {m00 * v.a + m01 * v.b, m10 * v.a + m11 * v.b};
    }
    Mat2c operator*(complexd s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }
    Mat2c operator+(const Mat2c& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2c operator-(const Mat2c& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }

    Mat2c adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    complexd trace() const { return m00 + m11; }
    complexd det() const { return m00 * m11 - m01 * m10; }

    Vec2c col(int j) const { return j == 0 ? Vec2c{m00, m10} : Vec2c{m01, m11}; }

    // max_ij |A_ij|
    double max_abs() const {
        return std::max(std::max(std::abs(m00), std::abs(m01)),
                        std::max(std::abs(m10), std::abs(m11)));
    }
    bool finite() const {
        auto ok = [](complexd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(m00) && ok(m01) && ok(m10) && ok(m11);
    }
};

inline double max_abs_diff(const Mat2c& a, const Mat2c& b) { return (a - b).max_abs(); }

// ||A A* - I||_max
inline double unitarity_defect(const Mat2c& a) {
    return max_abs_diff(a * a.adjoint(), Mat2c::identity());
}

// Pauli matrices sigma_0 .. sigma_3.
inline Mat2c pauli(int k) {
    const complexd i{0.0, 1.0};
    switch (k) {
        case 0: return Mat2c::identity();
        case 1: return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
        case 2: return {{0.0, 0.0}, -i, i, {0.0, 0.0}};
        case 3: return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
        default: throw std::domain_error("pauli: index must be 0..3");
    }
}

}  // namespace floquet
