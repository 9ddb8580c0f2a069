#pragma once

// Exact Fourier-space time evolution for the three mass models.
//
//   Switching:  per mode, n periods apply Mhat^n = P diag(e^{+2in theta},
//               e^{-2in theta}) P* (eigenphase power form, never repeated
//               matrix multiplication).
//   Rotating:   U(xi,t) = e^{i t drive sigma3 / 2} e^{-i D0(xi + drive/2) t},
//               D0(q) = q sigma3 + m sigma1, written out entrywise with
//               p(xi) = sqrt((xi + drive/2)^2 + m^2).
//   Constant:   the rotating formula at drive = 0.
//
// mode_oracle integrates the per-mode ODE i dV/dt = H(t) V with an adaptive
// Dormand-Prince 5(4) pair instead, as an independent cross-check of the
// closed forms: switching uses H = -xi sigma3 +/- m sigma1 on alternating
// unit intervals, rotating uses H = xi sigma3 + m (cos wt s1 - sin wt s2).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquet/complex2.hpp"
#include "floquet/dispersion.hpp"
#include "floquet/parallel.hpp"
#include "floquet/quadrature.hpp"
#include "floquet/spectral_field.hpp"
#include "floquet/wavepacket.hpp"

namespace floquet {

class OracleError : public std::runtime_error {
  public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

enum class MassKind { Constant, Switching, Rotating };

struct MassModel {
    MassKind kind = MassKind::Constant;
    double m = 1.0;
    double drive = 0.0;  // rotating only

    static MassModel constant(double m) {
        detail::require_mass(m);
        return {MassKind::Constant, m, 0.0};
    }
    static MassModel switching(double m) {
        detail::require_mass(m);
        return {MassKind::Switching, m, 0.0};
    }
    static MassModel rotating(double m, double drive) {
        detail::require_mass(m);
        if (!(drive > 0.0)) throw std::domain_error("rotating model: drive must be positive");
        return {MassKind::Rotating, m, drive};
    }
};

// Evolution extent: whole periods for the switching model (T = 2),
// wall-clock time for the constant and rotating models.
struct Extent {
    bool is_periods = false;
    long n = 0;
    double t = 0.0;

    static Extent periods(long n) {
        if (n < 0) throw std::domain_error("Extent: period count must be >= 0");
        Extent e;
        e.is_periods = true;
        e.n = n;
        return e;
    }
    static Extent time(double t) {
        if (!(t >= 0.0)) throw std::domain_error("Extent: time must be >= 0");
        Extent e;
        e.t = t;
        return e;
    }
    double duration() const { return is_periods ? 2.0 * static_cast<double>(n) : t; }
};

namespace detail {

inline Mat2c rotating_frame_propagator(double m, double drive, double xi, double t) {
    const double q = xi + 0.5 * drive;
    const double p = std::hypot(q, m);
    const double cp = std::cos(p * t);
    const double sp = std::sin(p * t) / p;
    const complexd eph = std::polar(1.0, 0.5 * drive * t);
    const complexd i{0.0, 1.0};
    return {eph * (cp - i * q * sp), -i * m * sp * eph,
            -i * m * sp * std::conj(eph), std::conj(eph) * (cp + i * q * sp)};
}

}  // namespace detail

inline Mat2c propagator(const MassModel& model, double xi, const Extent& ext) {
    switch (model.kind) {
        case MassKind::Switching: {
            if (!ext.is_periods)
                throw std::invalid_argument("propagator: switching model advances whole periods");
            const MonodromySymbol sym = monodromy_symbol(xi, model.m);
            const complexd mu = std::polar(1.0, 2.0 * static_cast<double>(ext.n) * sym.theta);
            return sym.basis * Mat2c::diag(mu, std::conj(mu)) * sym.basis.adjoint();
        }
        case MassKind::Rotating:
        case MassKind::Constant: {
            if (ext.is_periods)
                throw std::invalid_argument("propagator: model advances wall-clock time");
            return detail::rotating_frame_propagator(model.m, model.drive, xi, ext.t);
        }
    }
    throw std::logic_error("propagator: unreachable");
}

namespace detail {

// Dormand-Prince 5(4) over one sub-interval of the ODE V' = rhs(t, V).
template <class Rhs>
void dopri5_segment(Rhs&& rhs, double xi, double m, double drive, double t0, double t1, Mat2c& v,
                    double tol) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double span = t1 - t0;
    if (span <= 0.0) return;
    const double scale = 1.0 + std::hypot(xi, m) + drive;
    double h = std::min(span, 0.1 / scale);
    double t = t0;
    const double h_min = 1e-13 * std::max(1.0, t1);
    Mat2c k1 = rhs(t, v);
    while (t < t1) {
        h = std::min(h, t1 - t);
        if (h < h_min)
            throw OracleError("mode_oracle: step size underflow at t = " + std::to_string(t));
        const Mat2c y2 = v + k1 * (h * a21);
        const Mat2c k2 = rhs(t + c2 * h, y2);
        const Mat2c y3 = v + k1 * (h * a31) + k2 * (h * a32);
        const Mat2c k3 = rhs(t + c3 * h, y3);
        const Mat2c y4 = v + k1 * (h * a41) + k2 * (h * a42) + k3 * (h * a43);
        const Mat2c k4 = rhs(t + c4 * h, y4);
        const Mat2c y5 = v + k1 * (h * a51) + k2 * (h * a52) + k3 * (h * a53) + k4 * (h * a54);
        const Mat2c k5 = rhs(t + c5 * h, y5);
        const Mat2c y6 =
            v + k1 * (h * a61) + k2 * (h * a62) + k3 * (h * a63) + k4 * (h * a64) + k5 * (h * a65);
        const Mat2c k6 = rhs(t + h, y6);
        const Mat2c ynew =
            v + k1 * (h * b1) + k3 * (h * b3) + k4 * (h * b4) + k5 * (h * b5) + k6 * (h * b6);
        const Mat2c k7 = rhs(t + h, ynew);
        const Mat2c errm = k1 * (h * e1) + k3 * (h * e3) + k4 * (h * e4) + k5 * (h * e5) +
                           k6 * (h * e6) + k7 * (h * e7);
        const double err = errm.max_abs();
        if (err <= tol) {
            t += h;
            v = ynew;
            k1 = k7;  // FSAL
        }
        const double grow = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
    }
}

}  // namespace detail

// Fundamental solution V(t_end), V(0) = I, by adaptive Runge-Kutta with
// local tolerance 1e-11.  Switching-model mass flips land exactly on
// segment boundaries; each segment keeps its own generator throughout,
// including the closing stage evaluations at the right endpoint.
inline Mat2c mode_oracle(const MassModel& model, double xi, double t_end) {
    if (!(t_end >= 0.0)) throw std::domain_error("mode_oracle: t_end must be >= 0");
    Mat2c v = Mat2c::identity();
    const double tol = 1e-11;
    const complexd mi{0.0, -1.0};
    if (model.kind == MassKind::Switching) {
        double t = 0.0;
        while (t < t_end) {
            const double seg_start = std::floor(t);
            const double seg_end = std::min(seg_start + 1.0, t_end);
            const double mm = (static_cast<long>(seg_start) % 2 == 0) ? model.m : -model.m;
            const Mat2c h{complexd{-xi, 0.0}, complexd{mm, 0.0}, complexd{mm, 0.0},
                          complexd{xi, 0.0}};
            auto rhs = [&](double, const Mat2c& y) { return h * y * mi; };
            detail::dopri5_segment(rhs, xi, model.m, 0.0, t, seg_end, v, tol);
            t = seg_end;
        }
    } else if (model.kind == MassKind::Rotating) {
        auto rhs = [&](double t, const Mat2c& y) {
            const complexd e = std::polar(model.m, model.drive * t);
            const Mat2c h{complexd{xi, 0.0}, e, std::conj(e), complexd{-xi, 0.0}};
            return h * y * mi;
        };
        detail::dopri5_segment(rhs, xi, model.m, model.drive, 0.0, t_end, v, tol);
    } else {
        const Mat2c h{complexd{xi, 0.0}, complexd{model.m, 0.0}, complexd{model.m, 0.0},
                      complexd{-xi, 0.0}};
        auto rhs = [&](double, const Mat2c& y) { return h * y * mi; };
        detail::dopri5_segment(rhs, xi, model.m, 0.0, 0.0, t_end, v, tol);
    }
    return v;
}

// Per-mode multiplication by the closed-form propagator.
inline SpectralField evolve(const SpectralField& field, const MassModel& model,
                            const Extent& ext) {
    SpectralField out;
    out.grid = field.grid;
    out.values.resize(field.values.size());
    parallel_for(field.values.size(), [&](std::size_t j) {
        out.values[j] = propagator(model, field.grid.xi(j), ext) * field.values[j];
    });
    return out;
}

// (2 pi)^{-1} int U(xi; extent) fhat(xi) e^{i xi x} dxi over the packet
// support, by adaptive panel Gauss-Legendre with panel doubling.  The
// initial panel count follows the total phase variation of the integrand.
inline Vec2c point_eval(const Wavepacket& packet, const MassModel& model, const Extent& ext,
                        double x) {
    const double a = packet.support_lo();
    const double b = packet.support_hi();

    double phase_var = packet.delta * std::abs(x);
    if (model.kind == MassKind::Switching) {
        double max_theta = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double xi = a + (b - a) * i / 32.0;
            max_theta = std::max(max_theta, std::abs(theta(xi, model.m)));
        }
        phase_var += 2.0 * static_cast<double>(ext.n) * max_theta;
    } else {
        const double qmax = std::max(std::abs(a), std::abs(b)) + 0.5 * model.drive;
        phase_var += ext.t * (std::hypot(qmax, model.m) + 0.5 * model.drive);
    }
    QuadratureOptions opt;
    opt.initial_panels = panels_for_phase(phase_var);

    auto integrand = [&](double xi) -> Vec2c {
        return (propagator(model, xi, ext) * packet.fourier(xi)) * std::polar(1.0, xi * x);
    };
    const Vec2c val = integrate_adaptive(integrand, a, b, opt);
    return val * (1.0 / (2.0 * kPi));
}

// Grid sized so the period 2 pi / dxi exceeds twice the light-cone reach
// plus the packet's own physical extent, with the support resolved by at
// least 32 samples.
inline SpectralGrid auto_grid(const Wavepacket& packet, double duration) {
    const double x_pad = 256.0 / packet.delta + 16.0;
    const double period_min = 2.0 * (duration + x_pad) * 1.05;
    const double dxi_max = 2.0 * kPi / period_min;
    const double extent =
        1.25 * (std::abs(packet.xi_center) + packet.delta) + 0.5;
    std::size_t n = 64;
    while (2.0 * extent / static_cast<double>(n) > dxi_max ||
           2.0 * packet.delta / (2.0 * extent / static_cast<double>(n)) < 32.0) {
        n <<= 1;
        if (n > (std::size_t{1} << 22))
            throw GridError("auto_grid: required grid exceeds 2^22 modes");
    }
    return SpectralGrid{extent, n};
}

// Relative change of sup_norm under the two grid doublings (resolution and
// range).  smoothing_r = 0 disables the smoothing weight.
inline double grid_sufficiency_defect(const Wavepacket& packet, const MassModel& model,
                                      const Extent& ext, const SpectralGrid& grid,
                                      double smoothing_r = 0.0) {
    auto run = [&](const SpectralGrid& g) {
        SpectralField f = make_wavepacket(packet, g);
        if (smoothing_r > 0.0) f = smooth(f, smoothing_r);
        return sup_norm(evolve(f, model, ext));
    };
    const double base = run(grid);
    if (base == 0.0) return 0.0;
    const double finer = run(SpectralGrid{grid.xi_extent, grid.n * 2});
    const double wider = run(SpectralGrid{grid.xi_extent * 2.0, grid.n * 2});
    return std::max(std::abs(finer - base), std::abs(wider - base)) / base;
}

inline void check_grid_sufficiency(const Wavepacket& packet, const MassModel& model,
                                   const Extent& ext, const SpectralGrid& grid,
                                   double smoothing_r = 0.0) {
    const double defect = grid_sufficiency_defect(packet, model, ext, grid, smoothing_r);
    if (!(defect < 1e-6))
        throw GridError("grid sufficiency: doubling changed sup_norm by " +
                        std::to_string(defect) + " (>= 1e-6 relative)");
}

}  // namespace floquet
