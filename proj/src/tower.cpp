#include "folnerlab/tower.hpp"

#include "folnerlab/error.hpp"

namespace folnerlab {

QuotientMap::QuotientMap(std::shared_ptr<const GroupAlgebra> source, std::int64_t modulus)
    : source_(std::move(source)), modulus_(modulus)
{
    if (!source_)
        throw PreconditionError("quotient map without a source algebra");
    auto group = source_->group_ring().group().quotient(modulus);
    target_ = std::make_shared<GroupAlgebra>(std::make_shared<GroupFusionRing>(group));
}

IrrepLabel QuotientMap::push(const IrrepLabel& u) const
{
    return target_group().normalize(u);
}

IrrepSet QuotientMap::push(const IrrepSet& E) const
{
    std::vector<IrrepLabel> out;
    out.reserve(E.size());
    for (const auto& u : E)
        out.push_back(push(u));
    return IrrepSet(std::move(out));
}

AlgebraElement QuotientMap::push(const AlgebraElement& a) const
{
    if (a.algebra().tag() != source_->tag())
        throw PreconditionError("element of " + a.algebra().tag() + " pushed through a map from " + source_->tag());
    AlgebraElement out(target_);
    for (const auto& [idx, c] : a.terms())
        out.add_term({push(idx.irrep), 1, 1}, c);
    return out;
}

MatrixOverPol QuotientMap::push(const MatrixOverPol& T) const
{
    std::vector<AlgebraElement> entries;
    for (std::size_t i = 0; i < T.n(); ++i)
        for (std::size_t j = 0; j < T.n(); ++j)
            entries.push_back(push(T.at(i, j)));
    return MatrixOverPol(T.n(), std::move(entries));
}

bool QuotientMap::respects_products(const IrrepSet& labels) const
{
    const auto& g = source_->group_ring().group();
    const auto& h = target_group();
    for (const auto& u : labels)
        for (const auto& v : labels)
            if (push(g.multiply(u, v)) != h.multiply(push(u), push(v)))
                return false;
    return push(g.identity()) == h.identity();
}

QuotientTower::QuotientTower(std::shared_ptr<const GroupAlgebra> source, const std::vector<std::int64_t>& moduli)
    : source_(std::move(source))
{
    if (moduli.empty())
        throw PreconditionError("a tower needs at least one modulus");
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i > 0 && (moduli[i] <= moduli[i - 1] || moduli[i] % moduli[i - 1] != 0))
            throw PreconditionError("tower moduli must increase along a divisibility chain");
        levels_.emplace_back(source_, moduli[i]);
    }
}

bool QuotientTower::composites_commute(const IrrepSet& labels) const
{
    for (std::size_t j = 0; j < levels_.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (const auto& u : labels)
                if (levels_[i].push(levels_[j].push(u)) != levels_[i].push(u))
                    return false;
    return true;
}

IrrepSet omega_set(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S)
{
    std::vector<IrrepLabel> out(F.begin(), F.end());
    out.insert(out.end(), S.begin(), S.end());
    for (const auto& x : F)
        for (const auto& s : S)
            for (const auto& t : product_support(ring, x, s))
                out.push_back(t.label);
    return IrrepSet(std::move(out));
}

bool local_injectivity_check(const QuotientMap& map, const IrrepSet& F)
{
    return map.push(F).size() == F.size();
}

HaarReport haar_approx_sequence(const AlgebraElement& a, const QuotientTower& tower)
{
    HaarReport report;
    report.source_value = haar_state(a);
    report.omega = set_union(support(a), IrrepSet{a.algebra().ring().unit()});
    for (const auto& level : tower.levels()) {
        HaarLevel h{level.modulus(), haar_state(level.push(a)), local_injectivity_check(level, report.omega)};
        if (h.omega_injective && !report.first_injective)
            report.first_injective = report.levels.size();
        report.levels.push_back(std::move(h));
    }
    if (report.first_injective) {
        report.eventual_equality = true;
        for (std::size_t i = *report.first_injective; i < report.levels.size(); ++i)
            if (!(report.levels[i].value == report.source_value))
                report.eventual_equality = false;
    }
    return report;
}

TowerReport tower_kernel_dims(const MatrixOverPol& T, const QuotientTower& tower, const IrrepSet& F, Side side)
{
    if (T.is_zero())
        throw PreconditionError("tower kernel dimensions need T != 0");
    const auto& ring = T.algebra().ring();
    TowerReport report;
    report.window = F;
    report.support = support(T);
    report.omega = omega_set(ring, F, report.support);
    report.source = kernel_dim_estimate(T, F, side);
    report.transport_limit = 2 * static_cast<long>(T.n()) * report.source.boundary_ratio;
    report.composites_commute = tower.composites_commute(report.omega);
    report.identities_hold = report.composites_commute;

    for (const auto& level : tower.levels()) {
        TowerLevel out;
        out.modulus = level.modulus();
        out.target = level.target()->tag();
        out.omega_injective = local_injectivity_check(level, report.omega);
        try {
            MatrixOverPol Ti = level.push(T);
            const auto& target_ring = level.target()->ring();
            auto order = level.target_group().order();
            if (!order || *order * T.n() > max_quotient_size)
                throw PreconditionError("quotient " + out.target + " is too large for an exact kernel computation");
            if (!Ti.is_zero())
                out.quotient_dim = exact_mvn_dim_finite(Ti, side);
            else
                out.quotient_dim = mpq_class(static_cast<long>(T.n()));

            if (out.omega_injective) {
                if (!report.first_injective)
                    report.first_injective = report.levels.size();
                const auto& src = report.source;
                IrrepSet Fi = level.push(F);
                IrrepSet Si = level.push(src.support);
                out.support_pushforward = support(Ti) == Si;
                auto bd = boundary_decomposition(target_ring, Fi, Si, side);
                out.boundary_pushforward = level.push(src.boundary) == bd.boundary;
                out.weights_preserved = true;
                for (const IrrepSet* E : std::initializer_list<const IrrepSet*>{&F, &src.support, &src.interior, &src.boundary, &report.omega})
                    if (weighted_size(target_ring, level.push(*E)) != weighted_size(ring, *E))
                        out.weights_preserved = false;
                out.transport_gap = abs(src.lower - *out.quotient_dim);
                out.transport_bound = out.transport_gap <= report.transport_limit;
                if (!(out.support_pushforward && out.boundary_pushforward && out.weights_preserved &&
                      out.transport_bound))
                    report.identities_hold = false;
            }
        } catch (const Error& e) {
            out.error = e.what();
            if (out.omega_injective)
                report.identities_hold = false;
        }
        report.levels.push_back(std::move(out));
    }
    return report;
}

} // namespace folnerlab
