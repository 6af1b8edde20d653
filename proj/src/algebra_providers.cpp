#include <algorithm>
#include <cmath>

#include "folnerlab/clebsch_gordan.hpp"
#include "folnerlab/error.hpp"
#include "folnerlab/groups.hpp"
#include "folnerlab/polalg.hpp"

namespace folnerlab {

// ---- group algebras ---------------------------------------------------------

GroupAlgebra::GroupAlgebra(std::shared_ptr<const GroupFusionRing> ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw PreconditionError("group algebra without a group");
}

std::vector<BasisTerm> GroupAlgebra::multiply_basis(const BasisIndex& a, const BasisIndex& b) const
{
    return {{{ring_->group().multiply(a.irrep, b.irrep), 1, 1}, Scalar::one(ScalarMode::exact)}};
}

std::vector<BasisTerm> GroupAlgebra::adjoint_basis(const BasisIndex& a) const
{
    return {{{ring_->group().inverse(a.irrep), 1, 1}, Scalar::one(ScalarMode::exact)}};
}

// ---- SU(2) -----------------------------------------------------------------

Su2Algebra::Su2Algebra() : ring_(std::make_shared<Su2Ring>()) {}

namespace {

// doubled magnetic number of row/column index i in spin a/2
int magnetic(int a, int i)
{
    return a - 2 * (i - 1);
}

int index_of_magnetic(int c, int m)
{
    return (c - m) / 2 + 1;
}

} // namespace

std::vector<BasisTerm> Su2Algebra::multiply_basis(const BasisIndex& x, const BasisIndex& y) const
{
    const int a = static_cast<int>(x.irrep[0]);
    const int b = static_cast<int>(y.irrep[0]);
    const int mr = magnetic(a, x.row) + magnetic(b, y.row);
    const int mc = magnetic(a, x.col) + magnetic(b, y.col);
    const auto& cg = clebsch_gordan();
    std::vector<BasisTerm> out;
    for (int c = std::abs(a - b); c <= a + b; c += 2) {
        if (std::abs(mr) > c || std::abs(mc) > c)
            continue;
        double v = cg(a, magnetic(a, x.row), b, magnetic(b, y.row), c, mr) *
                   cg(a, magnetic(a, x.col), b, magnetic(b, y.col), c, mc);
        if (std::abs(v) < 1e-15)
            continue;
        out.push_back({{IrrepLabel(c), index_of_magnetic(c, mr), index_of_magnetic(c, mc)}, Scalar(Complex(v, 0.0))});
    }
    return out;
}

std::vector<BasisTerm> Su2Algebra::adjoint_basis(const BasisIndex& x) const
{
    const int a = static_cast<int>(x.irrep[0]);
    double sign = ((x.col - x.row) % 2 == 0) ? 1.0 : -1.0;
    return {{{x.irrep, a + 2 - x.row, a + 2 - x.col}, Scalar(Complex(sign, 0.0))}};
}

// ---- finite function algebras -------------------------------------------------

FiniteFunctionAlgebra::FiniteFunctionAlgebra(std::shared_ptr<const FiniteFusionRing> ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw PreconditionError("function algebra without a group");
    const auto& d = ring_->data();
    for (std::size_t alpha = 0; alpha < d.dims.size(); ++alpha)
        for (int i = 1; i <= d.dims[alpha]; ++i)
            for (int j = 1; j <= d.dims[alpha]; ++j)
                basis_.push_back({IrrepLabel(static_cast<std::int64_t>(alpha)), i, j});

    const std::size_t order = d.order();
    std::vector<std::vector<Complex>> values(basis_.size(), std::vector<Complex>(order));
    for (std::size_t x = 0; x < basis_.size(); ++x)
        for (std::size_t g = 0; g < order; ++g)
            values[x][g] = evaluate(basis_[x], g);

    products_.assign(basis_.size(), std::vector<std::vector<BasisTerm>>(basis_.size()));
    adjoints_.resize(basis_.size());
    std::vector<Complex> f(order);
    for (std::size_t x = 0; x < basis_.size(); ++x) {
        for (std::size_t y = 0; y < basis_.size(); ++y) {
            for (std::size_t g = 0; g < order; ++g)
                f[g] = values[x][g] * values[y][g];
            products_[x][y] = expand(f);
        }
        for (std::size_t g = 0; g < order; ++g)
            f[g] = std::conj(values[x][g]);
        adjoints_[x] = expand(f);
    }
}

Complex FiniteFunctionAlgebra::evaluate(const BasisIndex& idx, std::size_t g) const
{
    const auto& d = ring_->data();
    const auto alpha = static_cast<std::size_t>(idx.irrep[0]);
    const int n = d.dims.at(alpha);
    return d.irreps.at(alpha).at(g).at(static_cast<std::size_t>((idx.row - 1) * n + (idx.col - 1)));
}

std::vector<BasisTerm> FiniteFunctionAlgebra::expand(const std::vector<Complex>& values) const
{
    // Schur orthogonality: <u^a_ij, u^b_kl> over G = delta |G| / n_a
    const auto& d = ring_->data();
    const double order = static_cast<double>(d.order());
    std::vector<BasisTerm> out;
    for (const auto& idx : basis_) {
        Complex s = 0;
        for (std::size_t g = 0; g < values.size(); ++g)
            s += values[g] * std::conj(evaluate(idx, g));
        s *= d.dims[static_cast<std::size_t>(idx.irrep[0])] / order;
        if (std::abs(s) < 1e-12)
            continue;
        out.push_back({idx, Scalar(s)});
    }
    return out;
}

std::size_t FiniteFunctionAlgebra::flat(const BasisIndex& idx) const
{
    auto it = std::lower_bound(basis_.begin(), basis_.end(), idx);
    if (it == basis_.end() || *it != idx)
        throw PreconditionError("unknown matrix coefficient of " + idx.irrep.to_string());
    return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<BasisTerm> FiniteFunctionAlgebra::multiply_basis(const BasisIndex& a, const BasisIndex& b) const
{
    return products_[flat(a)][flat(b)];
}

std::vector<BasisTerm> FiniteFunctionAlgebra::adjoint_basis(const BasisIndex& a) const
{
    return adjoints_[flat(a)];
}

std::shared_ptr<const PolAlgebra> make_algebra(std::string_view tag)
{
    auto ring = make_ring(tag);
    if (auto g = std::dynamic_pointer_cast<const GroupFusionRing>(ring))
        return std::make_shared<GroupAlgebra>(g);
    if (auto f = std::dynamic_pointer_cast<const FiniteFusionRing>(ring))
        return std::make_shared<FiniteFunctionAlgebra>(f);
    if (std::dynamic_pointer_cast<const Su2Ring>(ring))
        return std::make_shared<Su2Algebra>();
    throw InvalidLabel("unknown algebra '" + std::string(tag) + "'");
}

} // namespace folnerlab
