#pragma once

// Dispersion relation and monodromy symbol of the sign-switching-mass Dirac
// model with period T = 2 (unit half-periods of mass +m / -m).
//
// Per Fourier mode xi the one-period solution map is the unitary
//
//   Mhat(xi; m) = script_m(xi; m)^2,
//   script_m    = i xi sinc(w) s0 + cos(w) s3 + m sinc(w) s2,   w = sqrt(m^2 + xi^2),
//
// (s0..s3 Pauli matrices).  Its Floquet multipliers are the conjugate pair
// e^{±2 i theta} with eigenphase
//
//   theta(xi; m) = arctan( xi sin(w) / sqrt(m^2 + xi^2 cos^2(w)) ),
//
// smooth in xi because the denominator is >= m.  Columns of the unitary
// basis P(xi) are the eigenvectors
//
//   p_pm ~ ( i m sinc(w), cos(w) -/+ sqrt(cos^2(w) + m^2 sinc^2(w)) ),
//
// normalized; the first column carries multiplier e^{+2 i theta}.
//
// Closed forms for d^k theta / d xi^k at xi = 0 (k = 1..5) are provided,
// plus Richardson-refined central finite differences for general xi.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "floquet/complex2.hpp"
#include "floquet/fdstencil.hpp"
#include "floquet/specfun.hpp"

namespace floquet {

namespace detail {
inline void require_mass(double m) {
    if (!(m > 0.0)) throw std::domain_error("mass parameter must be positive");
}

template <class T>
T theta_impl(T xi, T m) {
    const T w = std::sqrt(m * m + xi * xi);
    const T c = std::cos(w);
    return std::atan(xi * std::sin(w) / std::sqrt(m * m + xi * xi * c * c));
}
}  // namespace detail

// w(xi; m) = sqrt(m^2 + xi^2)
inline double omega(double xi, double m) {
    detail::require_mass(m);
    return std::sqrt(m * m + xi * xi);
}

// Monodromy eigenphase theta(xi; m) in (-pi/2, pi/2); odd in xi.
inline double theta(double xi, double m) {
    detail::require_mass(m);
    return detail::theta_impl(xi, m);
}

struct DispersionSample {
    double xi;
    double m;
    double omega;
    double theta;
};

inline DispersionSample dispersion_sample(double xi, double m) {
    return {xi, m, omega(xi, m), theta(xi, m)};
}

struct MonodromySymbol {
    double xi;
    Mat2c mhat;   // unitary, det = 1
    double theta;
    Mat2c basis;  // unitary; first column has multiplier e^{+2 i theta}
};

// Half-period map script_m(xi; m) = sigma3 e^{-i h(-xi, m)}.
inline Mat2c half_period_map(double xi, double m) {
    detail::require_mass(m);
    const double w = std::sqrt(m * m + xi * xi);
    const double c = std::cos(w);
    const double s = sinc(w);
    const complexd i{0.0, 1.0};
    return {complexd{c, xi * s}, -i * (m * s), i * (m * s), complexd{-c, xi * s}};
}

inline MonodromySymbol monodromy_symbol(double xi, double m) {
    detail::require_mass(m);
    const double w = std::sqrt(m * m + xi * xi);
    const double c = std::cos(w);
    const double s = sinc(w);
    const Mat2c script = half_period_map(xi, m);
    const Mat2c mhat = script * script;
    const double th = detail::theta_impl(xi, m);

    Mat2c basis = Mat2c::identity();
    const double off = m * s;  // off-diagonal magnitude of script_m
    if (std::abs(off) >= 1e-12) {
        const double r = std::sqrt(c * c + off * off);
        const complexd top{0.0, off};
        const double lo_p = c - r;
        const double lo_m = c + r;
        const Vec2c pp = Vec2c{top, complexd{lo_p, 0.0}} * (1.0 / std::sqrt(off * off + lo_p * lo_p));
        const Vec2c pm = Vec2c{top, complexd{lo_m, 0.0}} * (1.0 / std::sqrt(off * off + lo_m * lo_m));
        basis = Mat2c::from_columns(pp, pm);
    }
    // else: script_m is diagonal, Mhat = I, any unitary basis reconstructs it.
    return {xi, mhat, th, basis};
}

struct ThetaDerivsAtZero {
    double d1, d2, d3, d4, d5;
};

// m^3 * theta'''(0; m); root set identical to theta''' for m > 0 but free of
// the m^-3 amplification near the origin.
inline double theta3_scaled(double m) {
    const double sm = std::sin(m), cm = std::cos(m);
    return -2.0 * sm * sm * sm + 3.0 * m * cm - 3.0 * sm * cm * cm;
}

inline double theta5_at_zero(double m) {
    const double sm = std::sin(m), cm = std::cos(m);
    const double cm2 = cm * cm;
    return 3.0 / std::pow(m, 5) *
           (-5.0 * m * cm + 3.0 * sm * cm2 * cm2 + 12.0 * sm - 10.0 * m * cm2 * cm -
            5.0 * m * m * sm - 4.0 * sm * sm * sm);
}

inline ThetaDerivsAtZero theta_derivs_at_zero(double m) {
    detail::require_mass(m);
    return {std::sin(m) / m, 0.0, theta3_scaled(m) / (m * m * m), 0.0, theta5_at_zero(m)};
}

// Order-k derivative of theta(.; m) at xi by central finite differences:
// 7-point stencil for k <= 3, 9-point for k in {4, 5}, one Richardson step.
// Stencil sums are evaluated in long double.  The base step follows
// 1e-2 (1 + |xi|) near the origin but is capped by the local feature scale
// m / omega(xi): for |xi| >> m the eigenphase develops corner regions of
// width ~ m/xi and a wider stencil aliases their curvature into spurious
// sign changes of theta''.
inline double theta_derivative(double xi, double m, int order) {
    detail::require_mass(m);
    if (order < 1 || order > 5) throw std::domain_error("theta_derivative: order must be 1..5");

    static constexpr double kOrderScale[6] = {0.0, 1.0, 1.0, 1.6, 2.0, 2.4};
    const int half = order <= 3 ? 3 : 4;
    const int npts = 2 * half + 1;
    const int acc = (order % 2 == 1) ? ((npts - order) / 2) * 2  // 6,4 / 6,4
                                     : ((npts - 1 - order) / 2 + 1) * 2;
    const double corner_scale =
        std::max(5e-4, 0.25 * m / std::sqrt(m * m + xi * xi));
    const double h0 = std::min({0.05, std::max(1e-3, 1e-2 * (1.0 + std::abs(xi))), corner_scale}) *
                      kOrderScale[order];

    const long double lxi = xi, lm = m;
    auto stencil = [&](long double h) -> long double {
        std::vector<long double> nodes(npts);
        for (int k = -half; k <= half; ++k) nodes[k + half] = lxi + k * h;
        const auto w = fd_weights<long double>(lxi, nodes, order);
        long double acc_sum = 0.0L;
        for (int j = 0; j < npts; ++j)
            acc_sum += w[j] * detail::theta_impl<long double>(nodes[j], lm);
        return acc_sum;
    };

    const long double d_h = stencil(h0);
    const long double d_h2 = stencil(h0 / 2.0L);
    const long double p = std::pow(2.0L, static_cast<long double>(acc));
    return static_cast<double>((p * d_h2 - d_h) / (p - 1.0L));
}

}  // namespace floquet
