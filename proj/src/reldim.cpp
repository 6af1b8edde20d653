#include "folnerlab/reldim.hpp"

#include <algorithm>

#include "folnerlab/error.hpp"

namespace folnerlab {

namespace {

void require_window(const FusionRing& ring, const IrrepSet& F)
{
    if (F.empty())
        throw PreconditionError("window must be nonempty");
    for (const auto& u : F)
        ring.require_valid(u);
    if (!is_conjugation_closed(ring, F))
        throw PreconditionError("window must be conjugation closed");
}

} // namespace

mpq_class relative_dimension(const std::vector<std::vector<AlgebraElement>>& vectors, const IrrepSet& F, std::size_t n,
                             double tol)
{
    if (n == 0)
        throw PreconditionError("matrix size must be positive");
    if (vectors.empty())
        return 0;
    const auto& alg = vectors.front().at(0).algebra();
    const auto& ring = alg.ring();
    require_window(ring, F);

    auto coords = coordinate_basis(ring, F, n);
    ScalarMatrix m(coords.size(), vectors.size(), alg.mode());
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != n)
            throw PreconditionError("vector has " + std::to_string(vectors[c].size()) + " components, expected " +
                                    std::to_string(n));
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [idx, v] : vectors[c][k].terms()) {
                VectorIndex key{k, idx};
                auto it = std::lower_bound(coords.begin(), coords.end(), key);
                if (it == coords.end() || *it != key)
                    throw PreconditionError("vector has support outside the window at " + idx.irrep.to_string());
                // rescaling rows by sqrt(n_alpha) does not change the rank
                m.set(static_cast<std::size_t>(it - coords.begin()), c, v);
            }
    }
    auto rn = rank_nullity(m, tol);
    mpq_class out(static_cast<long>(rn.rank), weighted_size(ring, F));
    out.canonicalize();
    return out;
}

DimensionEstimate kernel_dim_estimate(const MatrixOverPol& T, const IrrepSet& F, Side side, double tol)
{
    const auto& ring = T.algebra().ring();
    require_window(ring, F);
    RestrictedOperator op = restricted_mult_matrix(T, F, side);

    DimensionEstimate est;
    est.window = F;
    est.support = op.support;
    est.interior = op.interior;
    est.boundary = op.boundary;
    est.n = T.n();
    est.side = side;
    est.mode = T.algebra().mode();
    est.window_weight = weighted_size(ring, F);
    est.boundary_weight = weighted_size(ring, op.boundary);
    est.boundary_ratio = mpq_class(est.boundary_weight, est.window_weight);
    est.boundary_ratio.canonicalize();
    est.domain_dim = op.matrix.cols();
    est.codomain_dim = op.matrix.rows();
    est.empty_interior = op.empty_interior;

    if (est.domain_dim > 0) {
        auto rn = rank_nullity(op.matrix, tol);
        est.rank = rn.rank;
        est.nullity = rn.nullity;
    }
    est.rank_sum_ok = est.rank + est.nullity == est.n * static_cast<std::size_t>(weighted_size(ring, op.interior));
    if (!est.rank_sum_ok)
        throw InternalError("rank + nullity differs from n |interior|");

    est.lower = mpq_class(static_cast<long>(est.nullity), est.window_weight);
    est.lower.canonicalize();
    est.upper = est.lower + static_cast<long>(est.n) * est.boundary_ratio;
    return est;
}

mpq_class exact_mvn_dim_finite(const MatrixOverPol& T, Side side, double tol)
{
    const auto& ring = T.algebra().ring();
    if (!ring.is_finite())
        throw PreconditionError("exact Murray-von Neumann dimension needs a finite ring, got " + ring.tag());
    IrrepSet all = ring.all_irreps();
    RestrictedOperator op = mult_matrix_between(T, all, all, side);
    auto rn = rank_nullity(op.matrix, tol);
    mpq_class out(static_cast<long>(rn.nullity), weighted_size(ring, all));
    out.canonicalize();
    return out;
}

} // namespace folnerlab
