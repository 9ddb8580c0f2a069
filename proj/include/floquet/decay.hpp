#pragma once

// Decay-exponent measurement: log-log regression of probe amplitude
// against evolution extent.  Peak probe samples |(M^n f)(n s0)| by direct
// oscillatory quadrature; sup probe takes the smoothed L-infinity norm of
// the grid-evolved field (rotating / constant models).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "floquet/evolution.hpp"
#include "floquet/linfit.hpp"
#include "floquet/stationary_phase.hpp"

namespace floquet {

enum class Probe { PeakAtXn, SupNorm };

inline constexpr double kSmoothingOrder = 1.5 + 0.01;  // <dx>^{-3/2-eps}, eps = 0.01
inline constexpr std::size_t kFitDrop = 2;             // discarded smallest extents

struct DecayFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double r_squared = 0.0;
    std::vector<double> extents;     // full sweep, ascending
    std::vector<double> amplitudes;  // measured probe values
    std::vector<double> predicted;   // asymptotic model per extent
    std::size_t window_start = kFitDrop;
};

inline DecayFit fit_decay(const MassModel& model, const Wavepacket& packet,
                          std::vector<double> extents, Probe probe) {
    if (extents.size() < kFitDrop + 5)
        throw std::invalid_argument(
            "fit_decay: need >= 7 extents so that >= 5 remain after dropping the smallest two");
    std::sort(extents.begin(), extents.end());
    if (!(extents.front() > 0.0))
        throw std::invalid_argument("fit_decay: extents must be positive");
    if (extents.back() / extents.front() < 100.0)
        throw std::invalid_argument("fit_decay: extents must span at least two decades");

    DecayFit out;
    out.extents = extents;

    if (probe == Probe::PeakAtXn) {
        if (model.kind != MassKind::Switching)
            throw std::invalid_argument("fit_decay: peak probe applies to the switching model");
        const double s0 = s_zero(model.m);
        const PeakClass cls = std::abs(theta_derivs_at_zero(model.m).d3) > 1e-4
                                  ? PeakClass::Generic
                                  : PeakClass::Exceptional;
        for (const double n : extents) {
            const long np = static_cast<long>(std::llround(n));
            if (np < 1 || std::abs(n - static_cast<double>(np)) > 1e-9)
                throw std::invalid_argument("fit_decay: peak probe needs integer period counts");
            try {
                out.amplitudes.push_back(
                    point_eval(packet, model, Extent::periods(np), n * s0).norm());
            } catch (const QuadratureError& e) {
                throw QuadratureError("fit_decay at n = " + std::to_string(np) + ": " +
                                      e.what());
            }
            out.predicted.push_back(predicted_peak(model.m, packet, np, cls).norm());
        }
    } else {
        if (model.kind == MassKind::Switching)
            throw std::invalid_argument(
                "fit_decay: sup probe applies to the rotating/constant models");
        const SpectralGrid grid = auto_grid(packet, extents.back());
        const SpectralField base = smooth(make_wavepacket(packet, grid), kSmoothingOrder);
        for (const double t : extents)
            out.amplitudes.push_back(sup_norm(evolve(base, model, Extent::time(t))));
    }

    std::vector<double> fx(extents.begin() + kFitDrop, extents.end());
    std::vector<double> fy(out.amplitudes.begin() + kFitDrop, out.amplitudes.end());
    const LinearFit fit = loglog_fit(fx, fy);
    out.exponent = fit.slope;
    out.intercept = fit.intercept;
    out.stderr_slope = fit.stderr_slope;
    out.r_squared = fit.r_squared;
    if (probe == Probe::SupNorm) {
        for (const double t : extents)
            out.predicted.push_back(std::exp(fit.intercept) * std::pow(t, fit.slope));
    }
    return out;
}

}  // namespace floquet
