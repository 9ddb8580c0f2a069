#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace floquet {

inline constexpr double kPi = 3.14159265358979323846;

// sin(x)/x with the removable singularity filled by its Taylor series.
// The series branch avoids cancellation of sin(x) against x for tiny x.
template <class T>
T sinc(T x) {
    if (std::abs(x) < T(1e-4)) {
        T x2 = x * x;
        return T(1) - x2 / T(6) + x2 * x2 / T(120);
    }
    return std::sin(x) / x;
}

// Gamma function by a Lanczos approximation (g = 7, 9 coefficients),
// reflection formula for Re z < 1/2.  Good to ~1e-14 relative on the
// real axis away from the poles.
inline double gamma_fn(double z) {
    if (std::isnan(z)) return z;
    if (z <= 0.0 && z == std::floor(z))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
    }
    z -= 1.0;
    double x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Ai(0) = 1 / (3^{2/3} Gamma(2/3)).
inline double airy_constant() { return 0.35502805388781723926; }

}  // namespace floquet
