#pragma once

#include <cmath>
#include <stdexcept>

#include "floquet/complex2.hpp"

namespace floquet {

enum class Envelope { Bump, TruncatedGaussian };

namespace detail {
// C-infinity step: 0 for t <= 0, 1 for t >= 1.
inline double smooth_step(double t) {
    auto phi = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
    const double a = phi(t);
    const double b = phi(1.0 - t);
    return a / (a + b);
}
}  // namespace detail

// Initial data in Fourier space: a smooth envelope of unit peak value,
// compactly supported in [xi_center - delta, xi_center + delta], times
// constant component weights.
struct Wavepacket {
    Envelope envelope = Envelope::Bump;
    double delta = 1.0;       // half-width of the Fourier support
    double xi_center = 0.0;
    Vec2c weights{complexd{1.0, 0.0}, complexd{0.0, 0.0}};

    Wavepacket() = default;
    Wavepacket(Envelope env, double half_width, double center, Vec2c w)
        : envelope(env), delta(half_width), xi_center(center), weights(w) {
        if (!(delta > 0.0)) throw std::invalid_argument("Wavepacket: delta must be positive");
    }

    // Envelope profile in the scaled variable u = (xi - xi_center)/delta;
    // identically zero for |u| >= 1, equal to 1 at u = 0.
    double envelope_value(double u) const {
        const double au = std::abs(u);
        if (au >= 1.0) return 0.0;
        switch (envelope) {
            case Envelope::Bump:
                return std::exp(1.0 - 1.0 / (1.0 - u * u));
            case Envelope::TruncatedGaussian:
                return std::exp(-0.5 * u * u) * detail::smooth_step(2.0 * (1.0 - au));
        }
        return 0.0;
    }

    Vec2c fourier(double xi) const { return weights * envelope_value((xi - xi_center) / delta); }

    double support_lo() const { return xi_center - delta; }
    double support_hi() const { return xi_center + delta; }
};

}  // namespace floquet
