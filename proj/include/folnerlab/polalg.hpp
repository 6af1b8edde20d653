#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "folnerlab/exactla.hpp"
#include "folnerlab/fusion.hpp"
#include "folnerlab/scalar.hpp"

namespace folnerlab {

/// Matrix coefficient u^alpha_{row,col}, 1 <= row, col <= n_alpha.
struct BasisIndex {
    IrrepLabel irrep;
    int row = 1;
    int col = 1;
    auto operator<=>(const BasisIndex&) const = default;
    bool operator==(const BasisIndex&) const = default;
};

struct BasisTerm {
    BasisIndex index;
    Scalar coefficient;
};

/// Concrete model of Pol(G) in the basis of matrix coefficients. Immutable and
/// shareable across threads.
class PolAlgebra {
public:
    virtual ~PolAlgebra() = default;

    virtual const FusionRing& ring() const = 0;
    virtual std::shared_ptr<const FusionRing> ring_ptr() const = 0;
    virtual ScalarMode mode() const = 0;
    std::string tag() const { return ring().tag(); }

    /// Structure constants: u^a_{ij} u^b_{kl} expanded in the basis.
    virtual std::vector<BasisTerm> multiply_basis(const BasisIndex& a, const BasisIndex& b) const = 0;
    /// (u^a_{ij})^* expanded in the basis.
    virtual std::vector<BasisTerm> adjoint_basis(const BasisIndex& a) const = 0;

    /// Throws PreconditionError unless the label is valid and the indices fit n_alpha.
    void require_index(const BasisIndex& idx) const;
};

/// Group algebra C[Gamma]: exact scalars, u^g_{11} = g, product = convolution.
class GroupAlgebra final : public PolAlgebra {
public:
    explicit GroupAlgebra(std::shared_ptr<const GroupFusionRing> ring);
    const FusionRing& ring() const override { return *ring_; }
    std::shared_ptr<const FusionRing> ring_ptr() const override { return ring_; }
    const GroupFusionRing& group_ring() const { return *ring_; }
    ScalarMode mode() const override { return ScalarMode::exact; }
    std::vector<BasisTerm> multiply_basis(const BasisIndex& a, const BasisIndex& b) const override;
    std::vector<BasisTerm> adjoint_basis(const BasisIndex& a) const override;

private:
    std::shared_ptr<const GroupFusionRing> ring_;
};

/// Pol(SU(2)) with real Clebsch-Gordan structure constants; floating scalars.
/// Row/column index i corresponds to the magnetic number m = k/2 - (i - 1).
class Su2Algebra final : public PolAlgebra {
public:
    Su2Algebra();
    const FusionRing& ring() const override { return *ring_; }
    std::shared_ptr<const FusionRing> ring_ptr() const override { return ring_; }
    ScalarMode mode() const override { return ScalarMode::floating; }
    std::vector<BasisTerm> multiply_basis(const BasisIndex& a, const BasisIndex& b) const override;
    std::vector<BasisTerm> adjoint_basis(const BasisIndex& a) const override;

private:
    std::shared_ptr<const Su2Ring> ring_;
};

/// Function algebra C(G) of a finite group, spanned by coefficients of its
/// unitary irreducibles; products are pointwise and re-expanded by Schur
/// orthogonality over the group. Floating scalars.
class FiniteFunctionAlgebra final : public PolAlgebra {
public:
    explicit FiniteFunctionAlgebra(std::shared_ptr<const FiniteFusionRing> ring);
    const FusionRing& ring() const override { return *ring_; }
    std::shared_ptr<const FusionRing> ring_ptr() const override { return ring_; }
    ScalarMode mode() const override { return ScalarMode::floating; }
    std::vector<BasisTerm> multiply_basis(const BasisIndex& a, const BasisIndex& b) const override;
    std::vector<BasisTerm> adjoint_basis(const BasisIndex& a) const override;

    /// Value of u^alpha_{ij} at group element g.
    Complex evaluate(const BasisIndex& idx, std::size_t g) const;

private:
    std::vector<BasisTerm> expand(const std::vector<Complex>& values) const;
    std::size_t flat(const BasisIndex& idx) const;

    std::shared_ptr<const FiniteFusionRing> ring_;
    std::vector<BasisIndex> basis_;
    std::vector<std::vector<std::vector<BasisTerm>>> products_;
    std::vector<std::vector<BasisTerm>> adjoints_;
};

/// "su2", "group:<G>", "finite:S3".
std::shared_ptr<const PolAlgebra> make_algebra(std::string_view tag);

using AlgebraPtr = std::shared_ptr<const PolAlgebra>;

/// Finitely supported element of Pol(G). Never stores zero coefficients.
class AlgebraElement {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    explicit AlgebraElement(AlgebraPtr algebra);

    static AlgebraElement unit(AlgebraPtr algebra);
    static AlgebraElement basis(AlgebraPtr algebra, const BasisIndex& idx);
    /// u^label_{11}; for group algebras this is the group element itself.
    static AlgebraElement group_element(AlgebraPtr algebra, const IrrepLabel& label);

    const PolAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    ScalarMode mode() const { return algebra_->mode(); }
    const Terms& terms() const { return terms_; }

    /// Adds c to the coefficient of idx; validates the index and scalar mode.
    void add_term(const BasisIndex& idx, const Scalar& c);
    Scalar coefficient(const BasisIndex& idx) const;
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement adjoint() const;
    /// Euclidean norm of the coefficient vector (not the L2 norm).
    double coefficient_norm() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Scalar& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;

    /// Same algebra and identical coefficients.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    void require_same(const AlgebraElement& o) const;

    AlgebraPtr algebra_;
    Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
IrrepSet support(const AlgebraElement& a);
/// L2(G) inner product, conjugate-linear in a: sum conj(a) b / n_alpha.
Scalar inner_product(const AlgebraElement& a, const AlgebraElement& b);
/// Coefficient of the trivial corepresentation.
Scalar haar_state(const AlgebraElement& a);
/// Exact: a == b. Floating: coefficient distance below tol.
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol = 1e-9);

/// Square n x n matrix over Pol(G).
class MatrixOverPol {
public:
    MatrixOverPol(AlgebraPtr algebra, std::size_t n);
    MatrixOverPol(std::size_t n, std::vector<AlgebraElement> entries);
    static MatrixOverPol scalar(const AlgebraElement& a);

    std::size_t n() const { return n_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const PolAlgebra& algebra() const { return *algebra_; }
    const AlgebraElement& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    AlgebraElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    bool is_zero() const;

private:
    AlgebraPtr algebra_;
    std::size_t n_;
    std::vector<AlgebraElement> entries_;
};

IrrepSet support(const MatrixOverPol& T);

/// Coordinate of W_F^n: component k of the n-tuple, matrix coefficient idx.
struct VectorIndex {
    std::size_t component = 0;
    BasisIndex index;
    auto operator<=>(const VectorIndex&) const = default;
    bool operator==(const VectorIndex&) const = default;
};

/// Multiplication by T restricted to W_{int_S(F)}^n -> W_F^n, in the orthonormal
/// basis sqrt(n_alpha) u^alpha_{ij}. Right: x -> (sum_i x_i T_ij)_j. Left: x -> (sum_j T_ij x_j)_i.
struct RestrictedOperator {
    Side side = Side::right;
    std::size_t n = 1;
    IrrepSet window;
    IrrepSet support;
    IrrepSet interior;
    IrrepSet boundary;
    std::vector<VectorIndex> domain;
    std::vector<VectorIndex> codomain;
    ScalarMatrix matrix{0, 0, ScalarMode::exact};
    bool empty_interior = false;

    /// Kernel coordinates (orthonormal basis) back to an n-tuple of elements.
    std::vector<AlgebraElement> domain_vector(const ScalarVector& coords, const AlgebraPtr& algebra) const;
};

/// All coordinates of W_E^n in the canonical order (component, label, row, col).
std::vector<VectorIndex> coordinate_basis(const FusionRing& ring, const IrrepSet& E, std::size_t n);

/// Builds the restricted multiplication operator. Throws PreconditionError for
/// T = 0 and InternalError if an image leaves W_F (fusion inclusion violated).
RestrictedOperator restricted_mult_matrix(const MatrixOverPol& T, const IrrepSet& F, Side side = Side::right);

/// Multiplication by T on W_E^n -> W_F^n with no interior restriction; the
/// images must lie in W_F. Used for whole finite algebras.
RestrictedOperator mult_matrix_between(const MatrixOverPol& T, const IrrepSet& E, const IrrepSet& F, Side side);

} // namespace folnerlab
