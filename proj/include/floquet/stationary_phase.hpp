#pragma once

// Degenerate stationary-phase machinery.
//
// For int f(z) e^{i w lambda(z)} dz with lambda'(0) = lambda''(0) = 0,
// lambda'''(0) != 0 the leading term is
//
//   2 pi e^{i lambda(0) w} Ai(0) f(0) (2/|lambda'''(0)|)^{1/3} w^{-1/3},
//
// and with lambda^{(j)}(0) = 0 for j = 1..4, lambda^{(5)}(0) != 0,
//
//   e^{i lambda(0) w} (2/5) Gamma(1/5) sin(2 pi/5)
//       (120/|lambda^{(5)}(0)|)^{1/5} f(0) w^{-1/5}.
//
// The 1/5-power of the 120/|lambda5| factor is positive: substituting
// z -> (120/|l5|)^{1/5} u maps the phase onto u^5 and multiplies the
// integral by exactly that Jacobian; the quadrature regression test pins
// the sign.
//
// Applied to the switching model through the peak phase
// Theta(xi) = xi s0 + 2 theta(xi), s0 = -2 theta'(0), whose + branch is
// doubly degenerate at xi = 0 (triply at exceptional masses).

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "floquet/complex2.hpp"
#include "floquet/dispersion.hpp"
#include "floquet/linfit.hpp"
#include "floquet/quadrature.hpp"
#include "floquet/specfun.hpp"
#include "floquet/wavepacket.hpp"

namespace floquet {

struct PhaseProfile {
    enum class Degeneracy { Order3, Order5 };

    double value0 = 0.0;  // lambda(0)
    double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0, d5 = 0.0;
    Degeneracy degeneracy = Degeneracy::Order3;

    static PhaseProfile order3(double lambda0, double lambda3) {
        PhaseProfile p;
        p.value0 = lambda0;
        p.d3 = lambda3;
        return p;
    }
    static PhaseProfile order5(double lambda0, double lambda5) {
        PhaseProfile p;
        p.value0 = lambda0;
        p.d5 = lambda5;
        p.degeneracy = Degeneracy::Order5;
        return p;
    }

    void validate() const {
        if (std::abs(d1) > 1e-9 || std::abs(d2) > 1e-9)
            throw std::domain_error("PhaseProfile: lambda'(0), lambda''(0) must vanish");
        if (degeneracy == Degeneracy::Order5 && (std::abs(d3) > 2.5e-4 || std::abs(d4) > 1e-9))
            throw std::domain_error("PhaseProfile: order-5 profile requires lambda''' ~ 0");
    }
};

inline complexd airy_leading(const PhaseProfile& p, complexd f0, double w) {
    p.validate();
    if (p.degeneracy != PhaseProfile::Degeneracy::Order3)
        throw std::domain_error("airy_leading: profile is not order-3 degenerate");
    if (p.d3 == 0.0) throw std::domain_error("airy_leading: lambda'''(0) vanishes");
    if (!(w > 0.0)) throw std::domain_error("airy_leading: w must be positive");
    return std::polar(1.0, p.value0 * w) * (2.0 * kPi * airy_constant()) * f0 *
           std::cbrt(2.0 / std::abs(p.d3)) * std::pow(w, -1.0 / 3.0);
}

inline complexd quintic_leading(const PhaseProfile& p, complexd f0, double w) {
    p.validate();
    if (p.degeneracy != PhaseProfile::Degeneracy::Order5)
        throw std::domain_error("quintic_leading: profile is not order-5 degenerate");
    if (p.d5 == 0.0) throw std::domain_error("quintic_leading: lambda^(5)(0) vanishes");
    if (!(w > 0.0)) throw std::domain_error("quintic_leading: w must be positive");
    const double c0 = 0.4 * gamma_fn(0.2) * std::sin(0.4 * kPi);
    return std::polar(1.0, p.value0 * w) * c0 * f0 *
           std::pow(120.0 / std::abs(p.d5), 0.2) * std::pow(w, -0.2);
}

// s0 = -2 theta'(0; m) = -2 sin(m)/m: the velocity of the stationary ray.
inline double s_zero(double m) {
    detail::require_mass(m);
    return -2.0 * std::sin(m) / m;
}

enum class PeakClass { Generic, Exceptional };

// Leading-order (M^n f)(n s0) for Fourier data concentrated near xi = 0.
// Only the e^{+2 i n theta} branch is stationary at the probe ray; its
// contribution is the projection onto the first eigencolumn at xi = 0.
inline Vec2c predicted_peak(double m, const Wavepacket& packet, long n, PeakClass cls) {
    detail::require_mass(m);
    if (n < 1) throw std::domain_error("predicted_peak: n must be >= 1");
    const ThetaDerivsAtZero d = theta_derivs_at_zero(m);
    if (cls == PeakClass::Generic && std::abs(d.d3) <= 1e-4)
        throw std::domain_error("predicted_peak: mass is exceptional, not generic");
    if (cls == PeakClass::Exceptional && (std::abs(d.d3) > 1e-4 || std::abs(d.d5) <= 1e-4))
        throw std::domain_error("predicted_peak: mass is not in the exceptional set");

    const Vec2c p_plus = monodromy_symbol(0.0, m).basis.col(0);
    const complexd f0 = dot(p_plus, packet.fourier(0.0)) / (2.0 * kPi);
    const double w = static_cast<double>(n);
    complexd amp;
    if (cls == PeakClass::Generic) {
        amp = airy_leading(PhaseProfile::order3(0.0, 2.0 * d.d3), f0, w);
    } else {
        auto prof = PhaseProfile::order5(0.0, 2.0 * d.d5);
        prof.d3 = 2.0 * d.d3;  // residual of the root polish, ~0
        amp = quintic_leading(prof, f0, w);
    }
    return p_plus * amp;
}

enum class VdcPhase { Generic, Exceptional, Linear };

struct VdcReport {
    int k = 0;
    double support = 0.0;
    std::vector<double> omegas;
    std::vector<double> s_values;  // w^{1/k} |int chi e^{i w Theta}|
    double max_s = 0.0;
    double min_s = 0.0;
    double ratio = 0.0;
    bool bounded = false;      // max/min <= 3 across the sweep
    double growth_slope = 0.0; // log-log slope of S against w
};

// van der Corput scaling probe: S(w) = w^{1/k} |int chi(xi) e^{i w Theta}|
// stays bounded when |Theta^{(k)}| has a positive lower bound on the
// support.  k_override probes a deliberately wrong order (negative
// control); 0 keeps the class default.
inline VdcReport vdc_scaling_check(VdcPhase phase, double m, const std::vector<double>& omegas,
                                   int k_override = 0, double support = 0.0) {
    if (omegas.size() < 4)
        throw std::invalid_argument("vdc_scaling_check: need >= 4 geometric omega samples");
    for (std::size_t i = 0; i + 1 < omegas.size(); ++i)
        if (!(omegas[i] > 0.0 && omegas[i + 1] > omegas[i]))
            throw std::invalid_argument("vdc_scaling_check: omegas must increase and be positive");

    VdcReport rep;
    rep.k = k_override != 0 ? k_override
                            : (phase == VdcPhase::Generic ? 3 : phase == VdcPhase::Exceptional ? 5 : 1);
    rep.support = support > 0.0 ? support : (phase == VdcPhase::Exceptional ? 1.5 : 1.0);
    rep.omegas = omegas;

    const double s0 = phase == VdcPhase::Linear ? 0.0 : s_zero(m);
    const Wavepacket chi{Envelope::Bump, rep.support, 0.0, Vec2c{complexd{1.0, 0.0}, {}}};
    for (const double w : omegas) {
        auto f = [&](double xi) -> complexd {
            const double th = phase == VdcPhase::Linear ? xi : xi * s0 + 2.0 * theta(xi, m);
            return std::polar(chi.envelope_value(xi / rep.support), w * th);
        };
        QuadratureOptions opt;
        opt.initial_panels = panels_for_phase(3.0 * w * rep.support);
        const complexd val = integrate_adaptive(f, -rep.support, rep.support, opt);
        rep.s_values.push_back(std::pow(w, 1.0 / rep.k) * std::abs(val));
    }
    rep.max_s = *std::max_element(rep.s_values.begin(), rep.s_values.end());
    rep.min_s = *std::min_element(rep.s_values.begin(), rep.s_values.end());
    rep.ratio = rep.min_s > 0.0 ? rep.max_s / rep.min_s : std::numeric_limits<double>::infinity();
    rep.bounded = rep.ratio <= 3.0;
    rep.growth_slope = loglog_fit(rep.omegas, rep.s_values).slope;
    return rep;
}

}  // namespace floquet
