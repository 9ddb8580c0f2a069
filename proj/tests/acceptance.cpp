// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Runtime limits are part of each criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "floquet/floquet.hpp"

using namespace floquet;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, const std::string& label, bool pass, double secs, double limit,
            const std::string& detail) {
    const bool ok = pass && secs < limit;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs/%.0fs) %s\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), secs, limit, detail.c_str());
    std::fflush(stdout);
}

void note(const std::string& text) {
    std::printf("       note: %s\n", text.c_str());
    std::fflush(stdout);
}

Wavepacket bump(double delta) {
    return Wavepacket{Envelope::Bump, delta, 0.0, Vec2c{complexd{1.0, 0.0}, {}}};
}

std::vector<double> dyadic(double lo, double hi) {
    std::vector<double> v;
    for (double x = lo; x <= hi; x *= 2.0) v.push_back(x);
    return v;
}

char buf[256];

void criterion_1() {
    Timer timer;
    const std::vector<double> masses{4.5659,  7.7681,  10.9346, 14.0898,
                                     17.2401, 20.3876, 23.5336, 26.6785};
    const std::vector<double> d5{14.1881, -14.7151, 14.8556, -14.9129,
                                 14.9418, -14.9583, 14.9687, -14.9757};
    const ExceptionalMassSet set = find_exceptional_masses(27.0);
    bool pass = set.masses.size() == 8;
    double worst = 0.0;
    for (std::size_t i = 0; pass && i < 8; ++i) {
        const double em = std::abs(set.masses[i].m_k - masses[i]);
        const double ed = std::abs(set.masses[i].scaled_d5 - d5[i]);
        worst = std::max({worst, em, ed});
        pass = em < 5e-4 && ed < 5e-4;
    }
    std::snprintf(buf, sizeof(buf), "max |delta| = %.2e (tol 5e-4)", worst);
    report(1, "Table-1 roots and scaled fifth derivatives", pass, timer.seconds(), 1.0, buf);
}

void criterion_2() {
    Timer timer;
    const ExceptionalMassSet set = find_exceptional_masses(70.0);
    std::vector<double> ms, d5s;
    for (std::size_t i = 0; i < 20 && i < set.masses.size(); ++i) {
        ms.push_back(set.masses[i].m_k);
        d5s.push_back(std::abs(theta5_at_zero(set.masses[i].m_k)));
    }
    bool pass = ms.size() == 20;
    double slope = 0.0;
    if (pass) {
        slope = loglog_fit(ms, d5s).slope;
        pass = std::abs(slope + 3.0) <= 0.05;
    }
    std::snprintf(buf, sizeof(buf), "slope = %.4f (want -3 +/- 0.05)", slope);
    report(2, "fifth-derivative scaling over k = 1..20", pass, timer.seconds(), 5.0, buf);
}

void criterion_3() {
    Timer timer;
    const InflectionScan scan = inflection_scan(1.0, 200.0, 1000000);
    const bool pass = scan.slope_valid && std::abs(scan.slope + 2.0) <= 0.1;
    std::snprintf(buf, sizeof(buf), "slope = %.4f over %zu roots (want -2 +/- 0.1)", scan.slope,
                  scan.points.size());
    report(3, "inflection-point third-derivative scaling, m = 1", pass, timer.seconds(), 30.0,
           buf);
}

void criterion_4() {
    Timer timer;
    const DecayFit fit =
        fit_decay(MassModel::switching(1.0), bump(0.2), dyadic(128, 16384), Probe::PeakAtXn);
    const bool pass = std::abs(fit.exponent + 1.0 / 3.0) <= 0.03 && fit.r_squared >= 0.995;
    std::snprintf(buf, sizeof(buf), "exponent = %.4f r2 = %.4f (want -1/3 +/- 0.03, r2 >= 0.995)",
                  fit.exponent, fit.r_squared);
    report(4, "generic decay rate, delta = 0.2 packet", pass, timer.seconds(), 300.0, buf);
    if (!pass) {
        const DecayFit wide = fit_decay(MassModel::switching(1.0), bump(1.0),
                                        dyadic(128, 16384), Probe::PeakAtXn);
        std::snprintf(buf, sizeof(buf),
                      "diagnostic (not a criterion): delta = 1.0 gives exponent = %.4f, "
                      "r2 = %.6f; the delta = 0.2 window n <= 16384 is preasymptotic "
                      "(|Theta(0.2)| n <= 13.6 rad)",
                      wide.exponent, wide.r_squared);
        note(buf);
    }
}

void criterion_5() {
    Timer timer;
    const DecayFit fit = fit_decay(MassModel::switching(4.5659), bump(0.2),
                                   dyadic(128, 16384), Probe::PeakAtXn);
    const bool pass = std::abs(fit.exponent + 0.2) <= 0.03 && fit.r_squared >= 0.995;
    std::snprintf(buf, sizeof(buf), "exponent = %.4f r2 = %.4f (want -1/5 +/- 0.03, r2 >= 0.995)",
                  fit.exponent, fit.r_squared);
    report(5, "exceptional decay rate, delta = 0.2 packet", pass, timer.seconds(), 300.0, buf);
    if (!pass) {
        const DecayFit wide = fit_decay(MassModel::switching(4.5659), bump(2.0),
                                        dyadic(128, 16384), Probe::PeakAtXn);
        std::snprintf(buf, sizeof(buf),
                      "diagnostic (not a criterion): delta = 2.0 gives exponent = %.4f, "
                      "r2 = %.6f; at delta = 0.2 the quintic phase never exceeds 0.02 rad "
                      "for n <= 16384, so the probe is flat",
                      wide.exponent, wide.r_squared);
        note(buf);
    }
}

void criterion_6() {
    Timer timer;
    const DecayFit fit = fit_decay(MassModel::rotating(1.0, 1.0), bump(4.0),
                                   dyadic(16, 4096), Probe::SupNorm);
    const bool pass = std::abs(fit.exponent + 0.5) <= 0.05 && fit.r_squared >= 0.995;
    std::snprintf(buf, sizeof(buf), "exponent = %.4f r2 = %.4f (want -1/2 +/- 0.05)",
                  fit.exponent, fit.r_squared);
    report(6, "rotating decay rate, smoothed sup norm", pass, timer.seconds(), 300.0, buf);
}

void criterion_7() {
    Timer timer;
    const Wavepacket packet = bump(1.0);
    const long n = 2048;
    const double x = static_cast<double>(n) * s_zero(1.0);
    const double measured =
        point_eval(packet, MassModel::switching(1.0), Extent::periods(n), x).norm();
    const double predicted = predicted_peak(1.0, packet, n, PeakClass::Generic).norm();
    const double rel = std::abs(measured - predicted) / measured;
    std::snprintf(buf, sizeof(buf), "|peak| = %.6e, Airy prediction = %.6e, rel = %.4f",
                  measured, predicted, rel);
    report(7, "Airy amplitude prediction at n = 2048", rel <= 0.15, timer.seconds(), 60.0, buf);
}

void criterion_8() {
    Timer timer;
    std::mt19937 rng(20250808);
    std::uniform_real_distribution<double> uxi(-20.0, 20.0), um(0.3, 8.0), ud(0.2, 4.0),
        ut(0.5, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double xi = uxi(rng), m = um(rng);
        worst = std::max(worst, max_abs_diff(monodromy_symbol(xi, m).mhat,
                                             mode_oracle(MassModel::switching(m), xi, 2.0)));
        const double d = ud(rng), t = ut(rng);
        worst = std::max(
            worst, max_abs_diff(propagator(MassModel::rotating(m, d), xi, Extent::time(t)),
                                mode_oracle(MassModel::rotating(m, d), xi, t)));
    }
    std::snprintf(buf, sizeof(buf), "max entrywise |delta| = %.2e (tol 1e-8)", worst);
    report(8, "closed forms vs adaptive ODE oracle, 100 samples", worst <= 1e-8,
           timer.seconds(), 30.0, buf);
}

void criterion_9() {
    Timer timer;
    bool pass = true;
    std::string why;

    // unitarity, det, theta oddness, Mhat(0) = I
    for (double m : {0.5, 1.0, 2.0, 4.5659}) {
        for (double xi = -50.0; xi <= 50.0; xi += 1.0) {
            const MonodromySymbol s = monodromy_symbol(xi, m);
            if (unitarity_defect(s.mhat) > 1e-12 ||
                std::abs(s.mhat.det() - complexd{1.0, 0.0}) > 1e-10 ||
                std::abs(theta(-xi, m) + theta(xi, m)) > 1e-12) {
                pass = false;
                why = "symbol invariants";
            }
        }
        if (max_abs_diff(monodromy_symbol(0.0, m).mhat, Mat2c::identity()) > 1e-12) {
            pass = false;
            why = "Mhat(0) != I";
        }
    }

    // L2 conservation over 1e4 periods / time 1e4
    const Wavepacket packet = bump(0.5);
    {
        const SpectralGrid grid = auto_grid(packet, 2.0e4);
        const SpectralField f0 = make_wavepacket(packet, grid);
        const double n0 = l2_norm(f0);
        if (std::abs(l2_norm(evolve(f0, MassModel::switching(1.0), Extent::periods(10000))) -
                     n0) > 1e-10 * n0 ||
            std::abs(l2_norm(evolve(f0, MassModel::rotating(1.0, 1.0), Extent::time(1e4))) -
                     n0) > 1e-10 * n0) {
            pass = false;
            why = "L2 drift";
        }
    }

    // Theta degeneracy at the stationary ray
    for (double m : {0.5, 1.0, 2.0}) {
        if (std::abs(s_zero(m) + 2.0 * theta_derivs_at_zero(m).d1) > 1e-10 ||
            std::abs(2.0 * theta_derivative(0.0, m, 2)) > 1e-10) {
            pass = false;
            why = "Theta'(0)/Theta''(0)";
        }
    }
    for (const auto& e : find_exceptional_masses(12.0).masses) {
        if (std::abs(2.0 * theta_derivs_at_zero(e.m_k).d3) > 1e-8 ||
            std::abs(2.0 * theta_derivative(0.0, e.m_k, 4)) > 1e-8) {
            pass = false;
            why = "Theta'''/Theta'''' at m_k";
        }
    }

    // closed-form derivative cross-checks
    for (double m : {0.5, 1.0, 2.0, 4.5659}) {
        const ThetaDerivsAtZero d = theta_derivs_at_zero(m);
        const double closed[6] = {0.0, d.d1, d.d2, d.d3, d.d4, d.d5};
        for (int ord = 1; ord <= 5; ++ord) {
            const double fd = theta_derivative(0.0, m, ord);
            const double err = (ord % 2 == 1 && std::abs(closed[ord]) > 1e-8)
                                   ? std::abs(fd - closed[ord]) / std::abs(closed[ord])
                                   : std::abs(fd - closed[ord]);
            if (err > 1e-6) {
                pass = false;
                why = "derivative cross-check";
            }
        }
    }
    report(9, "invariant suite", pass, timer.seconds(), 60.0,
           pass ? "unitarity, det, parity, L2, degeneracy, derivatives" : why);
}

void criterion_10() {
    Timer timer;
    const Wavepacket chi = bump(1.0);
    auto oscillatory = [&](double w, int order) {
        auto phase = [&](double z) {
            return order == 3 ? z * z * z / 6.0 : std::pow(z, 5) / 120.0;
        };
        auto f = [&](double z) { return std::polar(chi.envelope_value(z), w * phase(z)); };
        QuadratureOptions opt;
        opt.initial_panels = panels_for_phase(w * phase(1.0));
        return std::abs(integrate_adaptive(f, -1.0, 1.0, opt));
    };

    std::vector<double> omegas{1e2, 1e3, 1e4};
    std::vector<double> airy_err, quint_err;
    for (double w : omegas) {
        airy_err.push_back(std::abs(oscillatory(w, 3) -
                                    std::abs(airy_leading(PhaseProfile::order3(0.0, 1.0),
                                                          complexd{1.0, 0.0}, w))) /
                           oscillatory(w, 3));
        quint_err.push_back(std::abs(oscillatory(w, 5) -
                                     std::abs(quintic_leading(PhaseProfile::order5(0.0, 1.0),
                                                              complexd{1.0, 0.0}, w))) /
                            oscillatory(w, 5));
    }
    const double airy_order = -loglog_fit(omegas, airy_err).slope;
    const double quint_order = -loglog_fit(omegas, quint_err).slope;

    // pin the (120/|lambda5|)^{1/5} exponent sign by the oracle
    const double scaled = oscillatory(1e4, 5) * std::pow(1e4, 0.2);
    const double c0 = 0.4 * gamma_fn(0.2) * std::sin(0.4 * kPi);
    const double plus = c0 * std::pow(120.0, 0.2);
    const double minus = c0 * std::pow(120.0, -0.2);
    const bool sign_pinned =
        std::abs(scaled - plus) < 0.05 * plus && std::abs(scaled - plus) < std::abs(scaled - minus);

    const bool pass = airy_order >= 1.0 / 3.0 && quint_order >= 1.0 / 5.0 && sign_pinned;
    std::snprintf(buf, sizeof(buf),
                  "remainder orders: airy %.2f (>= 1/3), quintic %.2f (>= 1/5); "
                  "quintic constant %.4f vs +1/5-form %.4f (-1/5-form %.4f)",
                  airy_order, quint_order, scaled, plus, minus);
    report(10, "asymptotic expansion checks", pass, timer.seconds(), 60.0, buf);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
