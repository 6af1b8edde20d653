#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "folnerlab/polalg.hpp"

namespace folnerlab {

/// Bracket for the von Neumann kernel dimension of multiplication by T.
/// Nullities are integers in both scalar modes, so all values are exact rationals.
struct DimensionEstimate {
    mpq_class lower;
    mpq_class upper;
    IrrepSet window;
    IrrepSet support;
    IrrepSet interior;
    IrrepSet boundary;
    std::size_t n = 1;
    Side side = Side::right;
    ScalarMode mode = ScalarMode::exact;
    std::int64_t window_weight = 0;
    std::int64_t boundary_weight = 0;
    mpq_class boundary_ratio; ///< |boundary| / |F|, weighted
    std::size_t nullity = 0;
    std::size_t rank = 0;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    bool empty_interior = false;
    bool rank_sum_ok = false; ///< rank + nullity == n |interior|

    double width() const { return mpq_class(upper - lower).get_d(); }
    bool contains(const mpq_class& v) const { return lower <= v && v <= upper; }
};

/// |F|^{-1} dim span of n-tuples supported in F. F must be conjugation closed.
mpq_class relative_dimension(const std::vector<std::vector<AlgebraElement>>& vectors, const IrrepSet& F, std::size_t n,
                             double tol = default_rank_tolerance);

/// lower = nullity / |F| of the restricted operator; upper = lower + n |boundary| / |F|.
DimensionEstimate kernel_dim_estimate(const MatrixOverPol& T, const IrrepSet& F, Side side = Side::right,
                                      double tol = default_rank_tolerance);

/// Kernel dimension of multiplication by T on the whole finite-dimensional L2:
/// nullity / (total weighted size). PreconditionError on infinite rings.
mpq_class exact_mvn_dim_finite(const MatrixOverPol& T, Side side = Side::right, double tol = default_rank_tolerance);

} // namespace folnerlab
