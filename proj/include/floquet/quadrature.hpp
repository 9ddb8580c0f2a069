#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "floquet/complex2.hpp"

namespace floquet {

// Raised when panel doubling fails to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
inline constexpr double kGl16X[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGl16W[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

inline double quad_abs(double v) { return std::abs(v); }
inline double quad_abs(const std::complex<double>& v) { return std::abs(v); }
inline double quad_abs(const Vec2c& v) { return v.norm(); }

}  // namespace detail

template <class F>
auto gauss16(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hal = 0.5 * (b - a);
    auto acc = f(mid + hal * detail::kGl16X[0]) + f(mid - hal * detail::kGl16X[0]);
    acc = acc * detail::kGl16W[0];
    for (int i = 1; i < 8; ++i) {
        auto pair = f(mid + hal * detail::kGl16X[i]) + f(mid - hal * detail::kGl16X[i]);
        acc = acc + pair * detail::kGl16W[i];
    }
    return acc * hal;
}

template <class F>
auto composite_gauss16(F&& f, double a, double b, std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    auto acc = gauss16(f, a, a + h);
    for (std::size_t k = 1; k < panels; ++k)
        acc = acc + gauss16(f, a + k * h, a + (k + 1) * h);
    return acc;
}

struct QuadratureOptions {
    std::size_t initial_panels = 8;
    double rel_tol = 1e-8;
    double abs_floor = 1e-14;
    int max_doublings = 20;
    std::size_t panel_cap = std::size_t{1} << 22;
};

// Initial panel count from the total phase variation of the integrand;
// clamped before the cast so absurd phases surface as a QuadratureError
// in integrate_adaptive rather than overflowing the conversion.
inline std::size_t panels_for_phase(double phase_variation) {
    constexpr double two_pi = 6.283185307179586;
    const double want = std::max(8.0, phase_variation / two_pi / 3.0);
    return static_cast<std::size_t>(std::min(want, 6.0e6));
}

// Composite Gauss-Legendre with panel doubling until two refinements agree.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    std::size_t panels = opt.initial_panels < 1 ? 1 : opt.initial_panels;
    if (panels > opt.panel_cap)
        throw QuadratureError("quadrature: initial panel estimate " + std::to_string(panels) +
                              " exceeds cap " + std::to_string(opt.panel_cap) +
                              " (phase variation too large)");
    auto prev = composite_gauss16(f, a, b, panels);
    for (int d = 0; d < opt.max_doublings; ++d) {
        if (panels * 2 > opt.panel_cap)
            throw QuadratureError("quadrature: panel cap " + std::to_string(opt.panel_cap) +
                                  " reached without convergence; last delta unavailable");
        panels *= 2;
        auto cur = composite_gauss16(f, a, b, panels);
        const double delta = detail::quad_abs(cur - prev);
        const double scale = detail::quad_abs(cur);
        if (delta <= opt.rel_tol * scale + opt.abs_floor) return cur;
        prev = cur;
    }
    throw QuadratureError("quadrature: no convergence after " +
                          std::to_string(opt.max_doublings) + " doublings (" +
                          std::to_string(panels) + " panels)");
}

}  // namespace floquet
