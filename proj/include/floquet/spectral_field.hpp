#pragma once

// Uniform Fourier-grid representation of a two-component field and the
// FFT path back to physical space.
//
// Conventions (matching fhat(xi) = int e^{-i xi x} f dx):
//   xi_j = (j - N/2) dxi,   x_k = (k - N/2) dx,   dx dxi = 2 pi / N,
//   f(x) = (dxi / 2 pi) sum_j fhat_j e^{+i xi_j x}.
// The physical period is L = 2 pi / dxi; the caller must size dxi so the
// light cone (group speed <= 1) never wraps into the observation window.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "floquet/complex2.hpp"
#include "floquet/fft.hpp"
#include "floquet/parallel.hpp"
#include "floquet/specfun.hpp"
#include "floquet/wavepacket.hpp"

namespace floquet {

// Raised by the grid-sufficiency doubling check (CLI exit code 3).
class GridError : public std::runtime_error {
  public:
    explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

struct SpectralGrid {
    double xi_extent = 8.0;  // grid covers [-xi_extent, xi_extent)
    std::size_t n = 1024;    // power of two, >= 4

    SpectralGrid() = default;
    SpectralGrid(double extent, std::size_t count) : xi_extent(extent), n(count) {
        if (!(xi_extent > 0.0)) throw std::invalid_argument("SpectralGrid: extent must be > 0");
        if (n < 4 || (n & (n - 1)) != 0)
            throw std::invalid_argument("SpectralGrid: n must be a power of two >= 4");
    }

    double dxi() const { return 2.0 * xi_extent / static_cast<double>(n); }
    double xi(std::size_t j) const {
        return (static_cast<double>(j) - static_cast<double>(n) / 2.0) * dxi();
    }
    double dx() const { return 2.0 * kPi / (static_cast<double>(n) * dxi()); }
    double x(std::size_t k) const {
        return (static_cast<double>(k) - static_cast<double>(n) / 2.0) * dx();
    }
    double period() const { return 2.0 * kPi / dxi(); }
};

struct SpectralField {
    SpectralGrid grid;
    std::vector<Vec2c> values;  // size grid.n
    std::function<Vec2c(double)> envelope;  // analytic fhat for off-grid use, when known
};

inline SpectralField make_wavepacket(const Wavepacket& packet, const SpectralGrid& grid) {
    if (packet.support_lo() <= -grid.xi_extent || packet.support_hi() >= grid.xi_extent)
        throw std::invalid_argument("make_wavepacket: Fourier support exceeds the grid");
    if (2.0 * packet.delta / grid.dxi() < 32.0)
        throw std::invalid_argument(
            "make_wavepacket: grid too coarse (fewer than 32 samples across the support)");
    SpectralField f;
    f.grid = grid;
    f.values.resize(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) f.values[j] = packet.fourier(grid.xi(j));
    f.envelope = [packet](double xi) { return packet.fourier(xi); };
    return f;
}

// sqrt( (dxi / 2 pi) sum |v|^2 )  ~  L2 norm of the physical field.
inline double l2_norm(const SpectralField& f) {
    double acc = 0.0;
    for (const auto& v : f.values) acc += v.norm_sq();
    return std::sqrt(acc * f.grid.dxi() / (2.0 * kPi));
}

// Per-mode multiplier (1 + xi^2)^{-r/2}; the smoothing operator of the
// decay statements for non-localized data.
inline SpectralField smooth(const SpectralField& f, double r) {
    SpectralField out;
    out.grid = f.grid;
    out.values.resize(f.values.size());
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double xi = f.grid.xi(j);
        out.values[j] = f.values[j] * std::pow(1.0 + xi * xi, -0.5 * r);
    }
    return out;
}

struct PhysicalField {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<Vec2c> values;
    double x(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
};

// Samples of the trigonometric interpolant on the physical grid,
// optionally refined `pad` times by spectral zero padding.
inline PhysicalField to_physical(const SpectralField& f, std::size_t pad = 1) {
    if (pad == 0 || (pad & (pad - 1)) != 0)
        throw std::invalid_argument("to_physical: pad factor must be a power of two");
    const std::size_t n = f.grid.n;
    const std::size_t np = n * pad;
    std::vector<complexd> c1(np), c2(np);
    const std::size_t off = (np - n) / 2;
    for (std::size_t j = 0; j < n; ++j) {
        const double sgn = ((j + off) % 2 == 0) ? 1.0 : -1.0;
        c1[j + off] = f.values[j].a * sgn;
        c2[j + off] = f.values[j].b * sgn;
    }
    fft_radix2(c1, +1);
    fft_radix2(c2, +1);
    PhysicalField out;
    const double scale = f.grid.dxi() / (2.0 * kPi);
    out.dx = 2.0 * kPi / (static_cast<double>(np) * f.grid.dxi());
    out.x0 = -0.5 * static_cast<double>(np) * out.dx;
    out.values.resize(np);
    for (std::size_t k = 0; k < np; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        out.values[k] = Vec2c{c1[k], c2[k]} * (scale * sgn);
    }
    return out;
}

// Direct evaluation of the interpolant at an arbitrary point.
inline Vec2c eval_physical(const SpectralField& f, double x) {
    Vec2c acc;
    for (std::size_t j = 0; j < f.grid.n; ++j) {
        const complexd ph = std::polar(1.0, f.grid.xi(j) * x);
        acc = acc + f.values[j] * ph;
    }
    return acc * (f.grid.dxi() / (2.0 * kPi));
}

// L-infinity of the physical field: coarse maximum on the 4x zero-padded
// grid, then a golden-section polish of |f(x)|^2 in the winning cell.
inline double sup_norm(const SpectralField& f) {
    const PhysicalField p = to_physical(f, 4);
    std::size_t best = 0;
    double best_v = -1.0;
    for (std::size_t k = 0; k < p.values.size(); ++k) {
        const double v = p.values[k].norm_sq();
        if (v > best_v) {
            best_v = v;
            best = k;
        }
    }
    if (best_v <= 0.0) return 0.0;
    auto s = [&](double x) { return eval_physical(f, x).norm_sq(); };
    double lo = p.x(best) - p.dx, hi = p.x(best) + p.dx;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double s1 = s(x1), s2 = s(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++it) {
        if (s1 < s2) {
            lo = x1;
            x1 = x2;
            s1 = s2;
            x2 = lo + gr * (hi - lo);
            s2 = s(x2);
        } else {
            hi = x2;
            x2 = x1;
            s2 = s1;
            x1 = hi - gr * (hi - lo);
            s1 = s(x1);
        }
    }
    return std::sqrt(std::max({best_v, s1, s2}));
}

}  // namespace floquet
