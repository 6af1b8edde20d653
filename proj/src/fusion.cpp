#include "folnerlab/fusion.hpp"

#include <algorithm>

#include "folnerlab/error.hpp"

namespace folnerlab {

FusionProduct product_support(const FusionRing& ring, const IrrepLabel& u, const IrrepLabel& v)
{
    ring.require_valid(u);
    ring.require_valid(v);
    return ring.product(u, v);
}

std::int64_t weighted_size(const FusionRing& ring, const IrrepSet& F)
{
    std::int64_t total = 0;
    for (const auto& u : F) {
        std::int64_t n = ring.dim(u);
        total += n * n;
    }
    return total;
}

IrrepSet conjugate_set(const FusionRing& ring, const IrrepSet& F)
{
    std::vector<IrrepLabel> out;
    out.reserve(F.size());
    for (const auto& u : F)
        out.push_back(ring.conj(u));
    return IrrepSet(std::move(out));
}

IrrepSet conjugation_closure(const FusionRing& ring, const IrrepSet& F)
{
    return set_union(F, conjugate_set(ring, F));
}

bool is_conjugation_closed(const FusionRing& ring, const IrrepSet& F)
{
    return conjugate_set(ring, F) == F;
}

namespace {

FusionProduct side_product(const FusionRing& ring, const IrrepLabel& u, const IrrepLabel& v, Side side)
{
    return side == Side::right ? ring.product(u, v) : ring.product(v, u);
}

void require_labels(const FusionRing& ring, const IrrepSet& set)
{
    for (const auto& u : set)
        ring.require_valid(u);
}

} // namespace

IrrepSet interior(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S, Side side)
{
    if (S.empty())
        throw PreconditionError("interior relative to an empty set is undefined");
    require_labels(ring, F);
    require_labels(ring, S);
    std::vector<IrrepLabel> out;
    for (const auto& u : F) {
        bool inside = true;
        for (const auto& v : S) {
            for (const auto& t : side_product(ring, u, v, side))
                if (!F.contains(t.label)) {
                    inside = false;
                    break;
                }
            if (!inside)
                break;
        }
        if (inside)
            out.push_back(u);
    }
    return IrrepSet(std::move(out));
}

BoundaryDecomposition boundary_decomposition(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S, Side side)
{
    BoundaryDecomposition d;
    d.interior = interior(ring, F, S, side);
    d.boundary = set_difference(F, d.interior);

    // u outside F meets F under (x) v  <=>  u in supp(w (x) conj(v)) for some w in F
    std::vector<IrrepLabel> reach;
    for (const auto& w : F)
        for (const auto& v : S) {
            auto vbar = ring.conj(v);
            for (const auto& t : side_product(ring, w, vbar, side))
                reach.push_back(t.label);
        }
    d.coboundary = set_difference(IrrepSet(std::move(reach)), F);
    d.symmetric_boundary = set_union(d.boundary, d.coboundary);
    return d;
}

std::vector<IrrepSet> balls(const FusionRing& ring, const IrrepSet& S, std::int64_t max_radius)
{
    if (max_radius < 0)
        throw PreconditionError("radius must be nonnegative");
    require_labels(ring, S);
    IrrepSet steps = set_union(conjugation_closure(ring, S), IrrepSet{ring.unit()});

    std::vector<IrrepSet> out;
    IrrepSet current{ring.unit()};
    IrrepSet frontier = current;
    out.push_back(current);
    for (std::int64_t r = 1; r <= max_radius; ++r) {
        std::vector<IrrepLabel> next;
        for (const auto& w : frontier)
            for (const auto& s : steps)
                for (const auto& t : ring.product(w, s))
                    next.push_back(t.label);
        frontier = set_difference(IrrepSet(std::move(next)), current);
        current = set_union(current, frontier);
        out.push_back(current);
    }
    return out;
}

IrrepSet ball(const FusionRing& ring, const IrrepSet& S, std::int64_t radius)
{
    return balls(ring, S, radius).back();
}

namespace {

int multiplicity(const FusionRing& ring, const IrrepLabel& u, const IrrepLabel& v, const IrrepLabel& w)
{
    for (const auto& t : ring.product(u, v))
        if (t.label == w)
            return t.multiplicity;
    return 0;
}

} // namespace

AxiomReport check_fusion_axioms(const FusionRing& ring, const IrrepSet& labels)
{
    AxiomReport report;
    auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };
    const auto e = ring.unit();
    if (ring.dim(e) != 1)
        fail("unit has dimension " + std::to_string(ring.dim(e)));

    for (const auto& u : labels) {
        ++report.labels_checked;
        if (!ring.is_valid(u)) {
            fail("invalid label " + u.to_string());
            continue;
        }
        auto ubar = ring.conj(u);
        if (ring.conj(ubar) != u)
            fail("conjugation is not an involution at " + u.to_string());
        if (ring.dim(ubar) != ring.dim(u))
            fail("n_conj(u) != n_u at " + u.to_string());
        FusionProduct unit_only{{u, 1}};
        if (ring.product(e, u) != unit_only || ring.product(u, e) != unit_only)
            fail("unit law fails at " + u.to_string());
    }

    for (const auto& u : labels) {
        for (const auto& v : labels) {
            ++report.pairs_checked;
            auto uv = ring.product(u, v);
            std::int64_t total = 0;
            for (const auto& t : uv) {
                if (t.multiplicity <= 0)
                    fail("nonpositive multiplicity in " + u.to_string() + "*" + v.to_string());
                total += static_cast<std::int64_t>(t.multiplicity) * ring.dim(t.label);
            }
            if (total != static_cast<std::int64_t>(ring.dim(u)) * ring.dim(v))
                fail("dimension multiplicativity fails for " + u.to_string() + "*" + v.to_string());

            std::vector<IrrepLabel> ws(labels.begin(), labels.end());
            for (const auto& t : uv)
                ws.push_back(t.label);
            auto ubar = ring.conj(u);
            auto vbar = ring.conj(v);
            for (const auto& w : IrrepSet(std::move(ws))) {
                ++report.triples_checked;
                int n1 = multiplicity(ring, u, v, w);
                int n2 = multiplicity(ring, w, vbar, u);
                int n3 = multiplicity(ring, ubar, w, v);
                if (n1 != n2 || n1 != n3)
                    fail("Frobenius reciprocity fails at (" + u.to_string() + "," + v.to_string() + "," +
                         w.to_string() + ")");
            }
        }
    }
    return report;
}

IrrepSet default_axiom_labels(const FusionRing& ring)
{
    if (ring.is_finite())
        return ring.all_irreps();
    if (ring.tag() == "su2")
        return ring.standard_window(12);
    IrrepSet gens(ring.generators());
    return ball(ring, gens, 3);
}

} // namespace folnerlab
