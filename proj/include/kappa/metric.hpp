#ifndef KAPPA_METRIC_HPP
#define KAPPA_METRIC_HPP

#include <array>
#include <cstdlib>

namespace kappa {

// Metric g = diag(+, -, ..., -); g with both indices up equals g with both
// down, so a single sign function covers every placement.
inline int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

inline int kronecker(int a, int b) { return a == b ? 1 : 0; }

// Totally antisymmetric symbol with eps_{0 1 2 3} = +1 (all indices down).
inline int eps4_lower(int a, int b, int c, int d) {
    int idx[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

// eps with an arbitrary pattern of raised indices; raising uses g, so each
// raised spatial index flips the sign (raised 0 does not).
inline int eps4(int a, int b, int c, int d, bool up_a, bool up_b, bool up_c, bool up_d) {
    int v = eps4_lower(a, b, c, d);
    if (v == 0) return 0;
    if (up_a) v *= metric_sign(a);
    if (up_b) v *= metric_sign(b);
    if (up_c) v *= metric_sign(c);
    if (up_d) v *= metric_sign(d);
    return v;
}

// 3-dimensional spatial symbol, eps_{1 2 3} = +1; arguments in 1..3.
inline int eps3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    int v = (j - i) * (k - j) * (k - i);
    return v > 0 ? 1 : -1;
}

} // namespace kappa

#endif
