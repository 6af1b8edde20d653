#include "folnerlab/solvers.hpp"

#include <algorithm>

#include "folnerlab/error.hpp"

namespace folnerlab {

namespace {

void require_nonzero(const AlgebraElement& a, const char* what)
{
    if (a.is_zero())
        throw PreconditionError(std::string(what) + " must be nonzero");
}

bool vanishes(const AlgebraElement& x, double tol)
{
    if (x.mode() == ScalarMode::exact)
        return x.is_zero();
    return x.coefficient_norm() <= tol;
}

IrrepSet window_at(const FusionRing& ring, const IrrepSet& S, std::int64_t radius)
{
    return conjugation_closure(ring, ball(ring, S, radius));
}

bool is_zero_vector(const ScalarVector& v, std::size_t from, std::size_t to, ScalarMode mode)
{
    for (std::size_t i = from; i < to; ++i) {
        if (mode == ScalarMode::exact ? !v[i].is_zero() : v[i].abs() > 1e-12)
            return false;
    }
    return true;
}

} // namespace

bool verify_zero_divisor(const ZeroDivisorCertificate& cert, double tol)
{
    if (cert.b.is_zero())
        return false;
    AlgebraElement p = cert.side == Side::left ? cert.a * cert.b : cert.b * cert.a;
    if (cert.b.mode() == ScalarMode::exact)
        return p.is_zero();
    return p.coefficient_norm() <= tol * cert.b.coefficient_norm() * std::max(1.0, cert.a.coefficient_norm());
}

ZeroDivisorResult zero_divisor_search(const AlgebraElement& a, Side side, std::int64_t max_radius)
{
    require_nonzero(a, "element");
    if (max_radius < 1)
        throw PreconditionError("max radius must be at least 1");
    const auto& ring = a.algebra().ring();
    const IrrepSet S = support(a);
    const MatrixOverPol T = MatrixOverPol::scalar(a);

    NotFoundReport report{a, side, max_radius, {}};
    IrrepSet previous;
    for (std::int64_t r = 1; r <= max_radius; ++r) {
        IrrepSet F = window_at(ring, S, r);
        if (r > 1 && F == previous)
            break; // the ball has saturated (finite group); larger radii repeat the same computation
        previous = F;
        RestrictedOperator op = restricted_mult_matrix(T, F, side);
        auto est = kernel_dim_estimate(T, F, side);
        if (est.nullity > 0) {
            auto v = first_kernel_vector(op.matrix);
            if (!v)
                throw InternalError("positive nullity without a kernel vector");
            ZeroDivisorCertificate cert{a, op.domain_vector(*v, a.algebra_ptr())[0], side, F, r, false};
            cert.verified = verify_zero_divisor(cert);
            if (!cert.verified)
                throw InternalError("zero-divisor witness failed the full multiplication check");
            return cert;
        }
        report.sequence.push_back({r, std::move(est)});
    }
    return report;
}

std::vector<KernelDimPoint> kernel_dim_sequence(const AlgebraElement& a, Side side, const std::vector<std::int64_t>& radii)
{
    require_nonzero(a, "element");
    const auto& ring = a.algebra().ring();
    const IrrepSet S = support(a);
    std::vector<IrrepSet> windows;
    for (auto r : radii) {
        if (r < 0)
            throw PreconditionError("radii must be nonnegative");
        windows.push_back(window_at(ring, S, r));
    }
    auto out = kernel_dim_sequence(a, side, windows);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].radius = radii[i];
    return out;
}

std::vector<KernelDimPoint> kernel_dim_sequence(const AlgebraElement& a, Side side, const std::vector<IrrepSet>& windows)
{
    require_nonzero(a, "element");
    const MatrixOverPol T = MatrixOverPol::scalar(a);
    std::vector<KernelDimPoint> out;
    for (std::size_t i = 0; i < windows.size(); ++i)
        out.push_back({static_cast<std::int64_t>(i), kernel_dim_estimate(T, windows[i], side)});
    return out;
}

bool verify_ore_pair(const OrePair& pair, double tol)
{
    if (pair.t.is_zero())
        return false;
    return vanishes(pair.a * pair.t - pair.s * pair.b, tol);
}

OreResult ore_pair(const AlgebraElement& a, const AlgebraElement& s, std::int64_t max_radius, bool prefer_ore)
{
    require_nonzero(a, "a");
    require_nonzero(s, "s");
    if (max_radius < 1)
        throw PreconditionError("max radius must be at least 1");
    const auto& ring = a.algebra().ring();
    const IrrepSet S = set_union(support(a), support(s));
    OreExhaustion exhausted{a, s, max_radius, {}};

    struct Window {
        IrrepSet F;
        BoundaryDecomposition bd;
        std::int64_t weight = 0;
        std::int64_t boundary = 0;
    };
    auto evaluate = [&](std::int64_t r) {
        Window w;
        w.F = window_at(ring, S, r);
        w.bd = boundary_decomposition(ring, w.F, S, Side::left);
        w.weight = weighted_size(ring, w.F);
        w.boundary = weighted_size(ring, w.bd.boundary);
        exhausted.tried.push_back({r, w.weight, w.boundary});
        return w;
    };
    auto good = [](const Window& w) { return 2 * w.boundary < w.weight; };

    // doubling, then the smallest good radius above the last failure
    std::int64_t radius = 1, last_bad = 0;
    std::optional<Window> hit;
    while (true) {
        Window w = evaluate(radius);
        if (good(w)) {
            hit = std::move(w);
            break;
        }
        last_bad = radius;
        if (radius >= max_radius)
            return exhausted;
        radius = std::min(2 * radius, max_radius);
    }
    for (std::int64_t r = last_bad + 1; r < radius; ++r) {
        Window w = evaluate(r);
        if (good(w)) {
            hit = std::move(w);
            radius = r;
            break;
        }
    }

    const IrrepSet& F = hit->F;
    const IrrepSet& inner = hit->bd.interior;
    const auto inner_weight = weighted_size(ring, inner);
    if (2 * inner_weight <= hit->weight)
        throw InternalError("Ore window does not give more unknowns than equations");

    RestrictedOperator A = mult_matrix_between(MatrixOverPol::scalar(a), inner, F, Side::left);
    RestrictedOperator B = mult_matrix_between(MatrixOverPol::scalar(-s), inner, F, Side::left);
    const std::size_t half = A.matrix.cols();
    ScalarMatrix alpha(A.matrix.rows(), 2 * half, a.mode());
    for (std::size_t c = 0; c < half; ++c) {
        for (const auto& [r, v] : A.matrix.column(c))
            alpha.set(r, c, v);
        for (const auto& [r, v] : B.matrix.column(c))
            alpha.set(r, half + c, v);
    }

    auto split = [&](const ScalarVector& v) {
        ScalarVector x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half));
        ScalarVector y(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());
        return std::pair{A.domain_vector(x, a.algebra_ptr())[0], A.domain_vector(y, a.algebra_ptr())[0]};
    };

    std::optional<ScalarVector> chosen = first_kernel_vector(alpha);
    if (!chosen)
        throw InternalError("alpha has more columns than rows but no kernel");
    if (prefer_ore && is_zero_vector(*chosen, 0, half, a.mode())) {
        for (auto& v : nullspace_basis(alpha))
            if (!is_zero_vector(v, 0, half, a.mode())) {
                chosen = std::move(v);
                break;
            }
    }

    auto [t, b] = split(*chosen);
    if (is_zero_vector(*chosen, 0, half, a.mode())) {
        ZeroDivisorCertificate cert{s, b, Side::left, F, radius, false};
        cert.verified = verify_zero_divisor(cert);
        if (!cert.verified)
            throw InternalError("zero-divisor witness for s failed the full multiplication check");
        return cert;
    }
    OrePair pair{a, s, t, b, F, radius, hit->weight, hit->boundary, alpha.rows(), alpha.cols(), false};
    pair.verified = verify_ore_pair(pair);
    if (!pair.verified)
        throw InternalError("Ore pair failed the full multiplication check");
    return pair;
}

} // namespace folnerlab
