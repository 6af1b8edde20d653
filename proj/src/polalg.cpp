#include "folnerlab/polalg.hpp"

#include <algorithm>
#include <cmath>

#include "folnerlab/error.hpp"

namespace folnerlab {

void PolAlgebra::require_index(const BasisIndex& idx) const
{
    ring().require_valid(idx.irrep);
    int n = ring().dim(idx.irrep);
    if (idx.row < 1 || idx.row > n || idx.col < 1 || idx.col > n)
        throw PreconditionError("matrix coefficient index (" + std::to_string(idx.row) + "," +
                                std::to_string(idx.col) + ") out of range for irreducible " +
                                idx.irrep.to_string() + " of size " + std::to_string(n));
}

// ---- AlgebraElement -----------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr algebra) : algebra_(std::move(algebra))
{
    if (!algebra_)
        throw PreconditionError("element without an algebra");
}

AlgebraElement AlgebraElement::unit(AlgebraPtr algebra)
{
    auto e = algebra->ring().unit();
    return basis(std::move(algebra), {e, 1, 1});
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, const BasisIndex& idx)
{
    AlgebraElement out(std::move(algebra));
    out.add_term(idx, Scalar::one(out.mode()));
    return out;
}

AlgebraElement AlgebraElement::group_element(AlgebraPtr algebra, const IrrepLabel& label)
{
    return basis(std::move(algebra), {label, 1, 1});
}

void AlgebraElement::add_term(const BasisIndex& idx, const Scalar& c)
{
    algebra_->require_index(idx);
    if (c.mode() != mode())
        throw ModeMismatch("coefficient mode differs from algebra " + algebra_->tag());
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar AlgebraElement::coefficient(const BasisIndex& idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar::zero(mode()) : it->second;
}

void AlgebraElement::require_same(const AlgebraElement& o) const
{
    if (algebra_ != o.algebra_ && algebra_->tag() != o.algebra_->tag())
        throw PreconditionError("elements of different algebras (" + algebra_->tag() + ", " + o.algebra_->tag() + ")");
}

AlgebraElement AlgebraElement::adjoint() const
{
    AlgebraElement out(algebra_);
    for (const auto& [idx, c] : terms_)
        for (const auto& t : algebra_->adjoint_basis(idx))
            out.add_term(t.index, c.conj() * t.coefficient);
    return out;
}

double AlgebraElement::coefficient_norm() const
{
    double s = 0;
    for (const auto& [idx, c] : terms_)
        s += std::norm(c.to_complex());
    return std::sqrt(s);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    require_same(o);
    for (const auto& [idx, c] : o.terms_)
        add_term(idx, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    require_same(o);
    for (const auto& [idx, c] : o.terms_)
        add_term(idx, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c)
{
    if (c.mode() != mode())
        throw ModeMismatch("scalar mode differs from algebra " + algebra_->tag());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, v] : terms_)
        v *= c;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement out = *this;
    for (auto& [idx, v] : out.terms_)
        v = -v;
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return (a.algebra_ == b.algebra_ || a.algebra_->tag() == b.algebra_->tag()) && a.terms_ == b.terms_;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    a.require_same(b);
    AlgebraElement out(a.algebra_);
    const auto& alg = *a.algebra_;
    for (const auto& [ia, ca] : a.terms_)
        for (const auto& [ib, cb] : b.terms_) {
            Scalar cab = ca * cb;
            for (const auto& t : alg.multiply_basis(ia, ib)) {
                Scalar v = cab * t.coefficient;
                auto [it, inserted] = out.terms_.try_emplace(t.index, v);
                if (!inserted)
                    it->second += v;
            }
        }
    if (a.mode() == ScalarMode::exact) {
        std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    } else {
        double l1a = 0, l1b = 0;
        for (const auto& [i, c] : a.terms_)
            l1a += c.abs();
        for (const auto& [i, c] : b.terms_)
            l1b += c.abs();
        double cutoff = 1e-13 * l1a * l1b;
        std::erase_if(out.terms_, [cutoff](const auto& kv) { return kv.second.abs() <= cutoff; });
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    return a * b;
}

IrrepSet support(const AlgebraElement& a)
{
    std::vector<IrrepLabel> out;
    for (const auto& [idx, c] : a.terms())
        out.push_back(idx.irrep);
    return IrrepSet(std::move(out));
}

Scalar inner_product(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.algebra_ptr() != b.algebra_ptr() && a.algebra().tag() != b.algebra().tag())
        throw PreconditionError("inner product of elements of different algebras");
    const auto mode = a.mode();
    Scalar s = Scalar::zero(mode);
    for (const auto& [idx, ca] : a.terms()) {
        auto it = b.terms().find(idx);
        if (it == b.terms().end())
            continue;
        s += ca.conj() * it->second / Scalar::from_int(a.algebra().ring().dim(idx.irrep), mode);
    }
    return s;
}

Scalar haar_state(const AlgebraElement& a)
{
    return a.coefficient({a.algebra().ring().unit(), 1, 1});
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol)
{
    if (a.mode() == ScalarMode::exact)
        return a == b;
    return (a - b).coefficient_norm() <= tol;
}

// ---- MatrixOverPol --------------------------------------------------------------

MatrixOverPol::MatrixOverPol(AlgebraPtr algebra, std::size_t n)
    : algebra_(std::move(algebra)), n_(n), entries_(n * n, AlgebraElement(algebra_))
{
    if (n == 0)
        throw PreconditionError("matrix size must be positive");
}

MatrixOverPol::MatrixOverPol(std::size_t n, std::vector<AlgebraElement> entries) : n_(n), entries_(std::move(entries))
{
    if (n == 0 || entries_.size() != n * n)
        throw PreconditionError("matrix over Pol needs n*n entries with n > 0");
    algebra_ = entries_.front().algebra_ptr();
    for (const auto& e : entries_)
        if (e.algebra_ptr() != algebra_ && e.algebra().tag() != algebra_->tag())
            throw PreconditionError("matrix entries from different algebras");
}

MatrixOverPol MatrixOverPol::scalar(const AlgebraElement& a)
{
    return MatrixOverPol(1, {a});
}

bool MatrixOverPol::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

IrrepSet support(const MatrixOverPol& T)
{
    IrrepSet out;
    for (std::size_t i = 0; i < T.n(); ++i)
        for (std::size_t j = 0; j < T.n(); ++j)
            out = set_union(out, support(T.at(i, j)));
    return out;
}

// ---- restricted operators ---------------------------------------------------------

std::vector<VectorIndex> coordinate_basis(const FusionRing& ring, const IrrepSet& E, std::size_t n)
{
    std::vector<VectorIndex> out;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& u : E) {
            int d = ring.dim(u);
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j)
                    out.push_back({k, {u, i, j}});
        }
    return out;
}

namespace {

Scalar orthonormal_scale(int n_from, int n_to, ScalarMode mode)
{
    if (n_from == n_to)
        return Scalar::one(mode);
    if (mode == ScalarMode::exact)
        throw PreconditionError("exact mode cannot represent sqrt(n_alpha / n_beta) basis changes");
    return Scalar(Complex(std::sqrt(static_cast<double>(n_from) / n_to), 0.0));
}

void fill_matrix(RestrictedOperator& op, const MatrixOverPol& T, const IrrepSet& E)
{
    const auto& alg = T.algebra();
    const auto& ring = alg.ring();
    const auto mode = alg.mode();
    op.domain = coordinate_basis(ring, E, op.n);
    op.codomain = coordinate_basis(ring, op.window, op.n);
    op.matrix = ScalarMatrix(op.codomain.size(), op.domain.size(), mode);

    for (std::size_t col = 0; col < op.domain.size(); ++col) {
        const auto& dom = op.domain[col];
        AlgebraElement b = AlgebraElement::basis(T.algebra_ptr(), dom.index);
        int n_from = ring.dim(dom.index.irrep);
        for (std::size_t other = 0; other < op.n; ++other) {
            // right: component j of x*T collects x_k T_kj; left: component i of T*x collects T_ik x_k
            AlgebraElement image = op.side == Side::right ? b * T.at(dom.component, other) : T.at(other, dom.component) * b;
            for (const auto& [idx, c] : image.terms()) {
                VectorIndex target{other, idx};
                auto it = std::lower_bound(op.codomain.begin(), op.codomain.end(), target);
                if (it == op.codomain.end() || *it != target)
                    throw InternalError("image of " + dom.index.irrep.to_string() + " leaves the window at " +
                                        idx.irrep.to_string());
                std::size_t row = static_cast<std::size_t>(it - op.codomain.begin());
                op.matrix.set(row, col, c * orthonormal_scale(n_from, ring.dim(idx.irrep), mode));
            }
        }
    }
}

} // namespace

std::vector<AlgebraElement> RestrictedOperator::domain_vector(const ScalarVector& coords, const AlgebraPtr& algebra) const
{
    if (coords.size() != domain.size())
        throw PreconditionError("coordinate vector length does not match the domain");
    std::vector<AlgebraElement> out(n, AlgebraElement(algebra));
    const auto mode = algebra->mode();
    for (std::size_t c = 0; c < coords.size(); ++c) {
        if (coords[c].is_zero())
            continue;
        const auto& d = domain[c];
        int nd = algebra->ring().dim(d.index.irrep);
        Scalar v = coords[c];
        if (nd != 1) {
            if (mode == ScalarMode::exact)
                throw PreconditionError("exact mode cannot represent sqrt(n_alpha) rescaling");
            v *= Scalar(Complex(std::sqrt(static_cast<double>(nd)), 0.0));
        }
        out[d.component].add_term(d.index, v);
    }
    return out;
}

RestrictedOperator mult_matrix_between(const MatrixOverPol& T, const IrrepSet& E, const IrrepSet& F, Side side)
{
    RestrictedOperator op;
    op.side = side;
    op.n = T.n();
    op.window = F;
    op.support = support(T);
    op.interior = E;
    op.boundary = set_difference(F, E);
    op.empty_interior = E.empty();
    fill_matrix(op, T, E);
    return op;
}

RestrictedOperator restricted_mult_matrix(const MatrixOverPol& T, const IrrepSet& F, Side side)
{
    if (T.is_zero())
        throw PreconditionError("restricted multiplication needs T != 0 (its support defines the interior)");
    const auto& ring = T.algebra().ring();
    IrrepSet S = support(T);
    IrrepSet inner = interior(ring, F, S, side);
    RestrictedOperator op = mult_matrix_between(T, inner, F, side);
    op.support = std::move(S);
    return op;
}

} // namespace folnerlab
