#pragma once

// Independent reference computations used to check library results.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "folnerlab/polalg.hpp"

namespace oracles {

using folnerlab::AlgebraElement;

inline double factorial(int n)
{
    return std::tgamma(n + 1.0);
}

/// Racah's closed formula for <j1 m1; j2 m2 | J M>, arguments doubled.
inline double racah_cg(int a, int ma, int b, int mb, int c, int mc)
{
    if (ma + mb != mc || std::abs(ma) > a || std::abs(mb) > b || std::abs(mc) > c)
        return 0.0;
    if (c < std::abs(a - b) || c > a + b || (a + b + c) % 2 != 0)
        return 0.0;
    auto h = [](int x) { return x / 2; }; // all sums below are even
    double pre = std::sqrt((c + 1.0) * factorial(h(a + b - c)) * factorial(h(a - b + c)) * factorial(h(-a + b + c)) /
                           factorial(h(a + b + c) + 1));
    pre *= std::sqrt(factorial(h(a + ma)) * factorial(h(a - ma)) * factorial(h(b + mb)) * factorial(h(b - mb)) *
                     factorial(h(c + mc)) * factorial(h(c - mc)));
    double sum = 0;
    for (int k = 0; k <= h(a + b + c); ++k) {
        int d[5] = {h(a + b - c) - k, h(a - ma) - k, h(b + mb) - k, h(c - b + ma) + k, h(c - a - mb) + k};
        bool ok = true;
        for (int x : d)
            ok = ok && x >= 0;
        if (!ok)
            continue;
        double den = factorial(k);
        for (int x : d)
            den *= factorial(x);
        sum += (k % 2 ? -1.0 : 1.0) / den;
    }
    return pre * sum;
}

/// Kernel dimension of convolution by a (supported on integers) on Z/m via the
/// DFT: the number of k with sum_j a_j w^{jk} = 0, divided by m.
inline double dft_kernel_dim_cyclic(const std::vector<std::pair<std::int64_t, double>>& a, std::int64_t m)
{
    int zeros = 0;
    for (std::int64_t k = 0; k < m; ++k) {
        std::complex<double> s = 0;
        for (const auto& [j, c] : a)
            s += c * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m));
        if (std::abs(s) < 1e-9)
            zeros += 1;
    }
    return static_cast<double>(zeros) / static_cast<double>(m);
}

/// von Neumann kernel dimension of a in C[Z x Z/2]: for each character of Z/2
/// the Fourier symbol is a trigonometric polynomial, whose zero set has measure
/// zero unless it vanishes identically. Labels are (k, eps).
inline double fourier_kernel_dim_z_z2(const AlgebraElement& a)
{
    double dim = 0;
    for (int chi : {1, -1}) {
        bool all_zero = true;
        // collect coefficients per k
        std::vector<std::pair<std::int64_t, std::complex<double>>> coeffs;
        for (const auto& [idx, c] : a.terms()) {
            double sign = (idx.irrep[1] % 2 != 0 && chi == -1) ? -1.0 : 1.0;
            coeffs.push_back({idx.irrep[0], sign * c.to_complex()});
        }
        std::vector<std::pair<std::int64_t, std::complex<double>>> merged;
        for (const auto& [k, c] : coeffs) {
            bool found = false;
            for (auto& [k2, c2] : merged)
                if (k2 == k) {
                    c2 += c;
                    found = true;
                }
            if (!found)
                merged.push_back({k, c});
        }
        for (const auto& [k, c] : merged)
            all_zero = all_zero && std::abs(c) < 1e-12;
        if (all_zero)
            dim += 0.5;
    }
    return dim;
}

/// Weighted size of the su2 window {0..N}.
inline std::int64_t su2_ball_weight(std::int64_t N)
{
    std::int64_t s = 0;
    for (std::int64_t k = 0; k <= N; ++k)
        s += (k + 1) * (k + 1);
    return s;
}

} // namespace oracles
