#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace floquet {

// Sign-change brackets of f on (a, b] scanned with the given step.
template <class F>
std::vector<std::pair<double, double>> find_brackets(F&& f, double a, double b, double step) {
    std::vector<std::pair<double, double>> out;
    double x0 = a;
    double f0 = f(x0);
    while (x0 < b) {
        const double x1 = std::min(x0 + step, b);
        const double f1 = f(x1);
        if (f0 == 0.0)
            out.emplace_back(x0, x0);
        else if (f0 * f1 < 0.0)
            out.emplace_back(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return out;
}

// Bracket scan with a refinement pass: halve the step until two consecutive
// scans agree on the bracket count (guards two roots sharing one cell).
template <class F>
std::vector<std::pair<double, double>> stable_brackets(F&& f, double a, double b, double step,
                                                       int max_halvings = 6) {
    auto cur = find_brackets(f, a, b, step);
    for (int i = 0; i < max_halvings; ++i) {
        step *= 0.5;
        auto fine = find_brackets(f, a, b, step);
        if (fine.size() == cur.size()) return fine;
        cur = std::move(fine);
    }
    return cur;
}

// Secant iteration constrained to a sign-change bracket, bisection fallback.
template <class F>
double polish_root(F&& f, double lo, double hi, double f_tol, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("polish_root: not a bracket");
    double x = lo, fx = flo;
    for (int it = 0; it < max_iter; ++it) {
        double cand = (std::abs(fhi - flo) > 0.0) ? hi - fhi * (hi - lo) / (fhi - flo)
                                                  : 0.5 * (lo + hi);
        if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
        x = cand;
        fx = f(x);
        if (std::abs(fx) <= f_tol || hi - lo <= 4.0 * std::abs(x) * 1e-16) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    return x;
}

}  // namespace floquet
