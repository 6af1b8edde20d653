#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "folnerlab/io.hpp"
#include "folnerlab/polalg.hpp"

namespace testing_support {

using namespace folnerlab;

inline AlgebraPtr algebra(const std::string& tag)
{
    return shared_algebra(tag);
}

/// Exact element from (label, "p/q") pairs.
inline AlgebraElement exact(const AlgebraPtr& alg, const std::vector<std::pair<IrrepLabel, std::string>>& terms)
{
    AlgebraElement out(alg);
    for (const auto& [u, c] : terms)
        out.add_term({u, 1, 1}, Scalar(GaussianRational(parse_rational(c))));
    return out;
}

/// Floating element from (index, value) pairs.
inline AlgebraElement floating(const AlgebraPtr& alg, const std::vector<std::pair<BasisIndex, Complex>>& terms)
{
    AlgebraElement out(alg);
    for (const auto& [idx, c] : terms)
        out.add_term(idx, Scalar(c));
    return out;
}

inline IrrepSet interval(std::int64_t lo, std::int64_t hi)
{
    std::vector<IrrepLabel> out;
    for (auto k = lo; k <= hi; ++k)
        out.emplace_back(k);
    return IrrepSet(std::move(out));
}

/// {-N..N} x Z/2.
inline IrrepSet box_z_z2(std::int64_t N)
{
    std::vector<IrrepLabel> out;
    for (auto k = -N; k <= N; ++k)
        for (std::int64_t e = 0; e < 2; ++e)
            out.push_back({k, e});
    return IrrepSet(std::move(out));
}

/// Random nonzero exact element with small integer coefficients on the given labels.
inline AlgebraElement random_exact(const AlgebraPtr& alg, const std::vector<IrrepLabel>& labels, std::mt19937_64& rng,
                                   bool gaussian = false)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::bernoulli_distribution keep(0.6);
    while (true) {
        AlgebraElement out(alg);
        for (const auto& u : labels) {
            if (!keep(rng))
                continue;
            GaussianRational c(coef(rng), gaussian ? coef(rng) : 0);
            out.add_term({u, 1, 1}, Scalar(c));
        }
        if (!out.is_zero())
            return out;
    }
}

/// Random floating element over all matrix coefficients of the given labels.
inline AlgebraElement random_floating(const AlgebraPtr& alg, const IrrepSet& labels, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    AlgebraElement out(alg);
    for (const auto& u : labels) {
        int n = alg->ring().dim(u);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                out.add_term({u, i, j}, Scalar(Complex(g(rng), g(rng))));
    }
    return out;
}

inline mpq_class q(const std::string& text)
{
    return parse_rational(text);
}

} // namespace testing_support
