#pragma once

// The exceptional mass set Sigma = { m > 0 : theta'''(0; m) = 0 } and the
// large-xi inflection structure of the dispersion relation.
//
// Roots are located on g(m) = m^3 theta'''(0; m) = -2 sin^3 m + 3 m cos m
// - 3 sin m cos^2 m, which shares the zero set of theta''' on m > 0
// without the m^-3 amplification near the origin.  Asymptotically
// m_k = (k + 1/2) pi + O(1/k) and m_k^3 theta^(5)(0; m_k) -> +/- 15.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "floquet/dispersion.hpp"
#include "floquet/linfit.hpp"
#include "floquet/roots.hpp"
#include "floquet/specfun.hpp"

namespace floquet {

struct ExceptionalMass {
    int k = 0;                  // 1-based ascending index
    double m_k = 0.0;
    double residual = 0.0;      // |theta'''(0; m_k)|
    double scaled_d5 = 0.0;     // m_k^3 theta^(5)(0; m_k)
    double asymptotic_gap = 0.0;  // m_k - (k + k0 + 1/2) pi
};

struct ExceptionalMassSet {
    std::vector<ExceptionalMass> masses;
    int k0 = 0;  // offset minimizing sum_k |m_k - (k + k0 + 1/2) pi| over {-1, 0, 1}
};

inline ExceptionalMassSet find_exceptional_masses(double m_max) {
    if (!(m_max >= 5.0)) throw std::domain_error("find_exceptional_masses: m_max must be >= 5");
    auto g = [](double m) { return theta3_scaled(m); };
    const auto brackets = stable_brackets(g, 1e-3, m_max, 0.05);
    std::vector<double> roots;
    roots.reserve(brackets.size());
    for (const auto& [a, b] : brackets) roots.push_back(polish_root(g, a, b, 1e-11));

    ExceptionalMassSet out;
    if (roots.empty()) return out;

    double best_res = std::numeric_limits<double>::infinity();
    for (int k0 = -1; k0 <= 1; ++k0) {
        double res = 0.0;
        for (std::size_t k = 0; k < roots.size(); ++k)
            res += std::abs(roots[k] - (static_cast<double>(k + 1) + k0 + 0.5) * kPi);
        if (res < best_res) {
            best_res = res;
            out.k0 = k0;
        }
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const double m = roots[k];
        ExceptionalMass e;
        e.k = static_cast<int>(k + 1);
        e.m_k = m;
        e.residual = std::abs(theta3_scaled(m)) / (m * m * m);
        e.scaled_d5 = m * m * m * theta5_at_zero(m);
        e.asymptotic_gap = m - (static_cast<double>(e.k) + out.k0 + 0.5) * kPi;
        out.masses.push_back(e);
    }
    return out;
}

// (m, theta'''(0; m)) along a mass grid; the data behind the
// third-derivative crossing plot.
inline std::vector<std::pair<double, double>> theta3_curve(const std::vector<double>& m_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(m_grid.size());
    for (const double m : m_grid) {
        detail::require_mass(m);
        out.emplace_back(m, theta3_scaled(m) / (m * m * m));
    }
    return out;
}

struct InflectionPoint {
    int l = 0;
    double xi = 0.0;
    double theta2_residual = 0.0;  // |theta''(xi_l)| after polishing
    double d3 = 0.0;               // theta'''(xi_l)
};

struct InflectionScan {
    std::vector<InflectionPoint> points;
    bool truncated = false;   // fewer roots in range than requested
    double slope = 0.0;       // log-log slope of |theta'''(xi_l)| vs xi_l, last half
    double slope_r2 = 0.0;
    bool slope_valid = false;
};

// Positive roots of theta''(.; m) by sign-change scan (step 0.05) and
// secant polish, each annotated with theta''' there.  theta'' vanishes at
// xi = 0 by parity; the scan starts just above the origin.
inline InflectionScan inflection_scan(double m, double xi_max, std::size_t count) {
    detail::require_mass(m);
    if (!(xi_max > m)) throw std::domain_error("inflection_scan: xi_max must exceed m");
    if (count == 0) throw std::domain_error("inflection_scan: count must be positive");

    auto f = [m](double xi) { return theta_derivative(xi, m, 2); };
    InflectionScan out;
    const double step = 0.05;
    double x0 = step;
    double f0 = f(x0);
    while (x0 < xi_max && out.points.size() < count) {
        const double x1 = std::min(x0 + step, xi_max);
        const double f1 = f(x1);
        if (f0 == 0.0 || f0 * f1 < 0.0) {
            const double root = f0 == 0.0 ? x0 : polish_root(f, x0, x1, 1e-12);
            InflectionPoint p;
            p.l = static_cast<int>(out.points.size() + 1);
            p.xi = root;
            p.theta2_residual = std::abs(f(root));
            p.d3 = theta_derivative(root, m, 3);
            out.points.push_back(p);
        }
        x0 = x1;
        f0 = f1;
    }
    out.truncated = out.points.size() < count && x0 >= xi_max;

    const std::size_t half = out.points.size() / 2;
    if (out.points.size() - half >= 3) {
        std::vector<double> xs, ys;
        for (std::size_t i = half; i < out.points.size(); ++i) {
            xs.push_back(out.points[i].xi);
            ys.push_back(std::abs(out.points[i].d3));
        }
        const LinearFit fit = loglog_fit(xs, ys);
        out.slope = fit.slope;
        out.slope_r2 = fit.r_squared;
        out.slope_valid = true;
    }
    return out;
}

}  // namespace floquet
