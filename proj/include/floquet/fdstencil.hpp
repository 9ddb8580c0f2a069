#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace floquet {

// Fornberg's algorithm: weights of the derivative of order `m` at z, on the
// nodes x[0..n-1].  Returned in the same order as the nodes.
template <class T>
std::vector<T> fd_weights(T z, const std::vector<T>& x, int m) {
    const int n = static_cast<int>(x.size());
    std::vector<T> c(static_cast<std::size_t>(n) * (m + 1), T(0));
    auto C = [&](int i, int j) -> T& { return c[static_cast<std::size_t>(i) * (m + 1) + j]; };

    T c1 = T(1);
    T c4 = x[0] - z;
    C(0, 0) = T(1);
    for (int i = 1; i < n; ++i) {
        const int mn = i < m ? i : m;
        T c2 = T(1);
        T c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const T c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C(i, k) = c1 * (T(k) * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                C(j, k) = (c4 * C(j, k) - T(k) * C(j, k - 1)) / c3;
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    std::vector<T> w(n);
    for (int i = 0; i < n; ++i) w[i] = C(i, m);
    return w;
}

}  // namespace floquet
