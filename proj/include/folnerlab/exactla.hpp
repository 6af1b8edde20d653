#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "folnerlab/scalar.hpp"

namespace folnerlab {

inline constexpr double default_rank_tolerance = 1e-9;

/// Rectangular matrix in a single scalar mode. Addressed densely, stored by
/// sparse columns (restricted multiplication matrices have a handful of
/// nonzeros per column).
class ScalarMatrix {
public:
    using Column = std::map<std::size_t, Scalar>;

    ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode);
    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, ScalarMode mode);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    ScalarMode mode() const { return mode_; }

    /// Setting a literal zero erases the entry.
    void set(std::size_t r, std::size_t c, const Scalar& v);
    Scalar at(std::size_t r, std::size_t c) const;
    const Column& column(std::size_t c) const { return columns_.at(c); }
    std::size_t nonzeros() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
    /// Columns [0, count).
    ScalarMatrix leading_columns(std::size_t count) const;
    double frobenius_norm() const;

private:
    std::size_t rows_;
    ScalarMode mode_;
    std::vector<Column> columns_;
};

struct RankNullity {
    std::size_t rank = 0;
    std::size_t nullity = 0;
};

using ScalarVector = std::vector<Scalar>;

/// Exact mode: field-exact rank over Q(i), tol ignored. Floating mode: number of
/// singular values above tol * sigma_max; tol must be positive.
RankNullity rank_nullity(const ScalarMatrix& m, double tol = default_rank_tolerance);

/// Kernel basis. Exact mode: one vector per non-pivot column (pivoting runs
/// left to right), scaled so the first nonzero coordinate is 1. Floating mode:
/// right singular vectors below threshold, unit norm, first significant
/// coordinate real and positive. Identical inputs give identical outputs.
std::vector<ScalarVector> nullspace_basis(const ScalarMatrix& m, double tol = default_rank_tolerance);

/// First vector of nullspace_basis without computing the rest; nullopt iff nullity is 0.
std::optional<ScalarVector> first_kernel_vector(const ScalarMatrix& m, double tol = default_rank_tolerance);

/// Exact: m v == 0. Floating: |m v| <= tol |m|_F |v|.
bool is_kernel_vector(const ScalarMatrix& m, const ScalarVector& v, double tol = default_rank_tolerance);

/// Dense complex copy of m; exact entries are rounded to doubles.
Eigen::MatrixXcd to_dense_complex(const ScalarMatrix& m);

} // namespace folnerlab
