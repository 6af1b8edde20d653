#include "folnerlab/folner.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "folnerlab/error.hpp"
#include "folnerlab/scalar.hpp"

namespace folnerlab {

namespace {

void require_inputs(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon)
{
    if (S.empty())
        throw PreconditionError("S must be nonempty");
    for (const auto& s : S)
        ring.require_valid(s);
    if (sgn(epsilon) <= 0)
        throw PreconditionError("epsilon must be positive");
}

ProfileRow profile_row(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S, std::int64_t radius)
{
    auto bd = boundary_decomposition(ring, F, S);
    ProfileRow row;
    row.radius = radius;
    row.weight = weighted_size(ring, F);
    row.boundary = weighted_size(ring, bd.boundary);
    row.symmetric_boundary = weighted_size(ring, bd.symmetric_boundary);
    row.ratio = mpq_class(row.symmetric_boundary, row.weight);
    row.ratio.canonicalize();
    return row;
}

// strict: sym * q < p * |F|
bool satisfies(const ProfileRow& row, const mpq_class& epsilon)
{
    mpz_class lhs = mpz_class(row.symmetric_boundary) * epsilon.get_den();
    mpz_class rhs = epsilon.get_num() * mpz_class(row.weight);
    return lhs < rhs;
}

FolnerResult scan(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon,
                  const std::vector<IrrepSet>& windows, const std::string& strategy, std::int64_t first_index)
{
    ExhaustionReport report{S, epsilon, first_index + static_cast<std::int64_t>(windows.size()) - 1, strategy, {}};
    for (std::size_t k = 0; k < windows.size(); ++k) {
        IrrepSet F = conjugation_closure(ring, windows[k]);
        ProfileRow row = profile_row(ring, F, S, first_index + static_cast<std::int64_t>(k));
        if (satisfies(row, epsilon)) {
            FolnerCertificate cert{S, epsilon, F, row.symmetric_boundary, row.weight, strategy, row.radius};
            if (!verify_folner_certificate(ring, cert))
                throw InternalError("Folner certificate failed independent verification");
            return cert;
        }
        report.profile.push_back(std::move(row));
    }
    return report;
}

} // namespace

FolnerResult folner_search(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon, std::int64_t max_radius)
{
    require_inputs(ring, S, epsilon);
    if (max_radius < 0)
        throw PreconditionError("max radius must be nonnegative");
    return scan(ring, S, epsilon, balls(ring, S, max_radius), "ball", 0);
}

FolnerResult folner_search_windows(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon,
                                   const std::vector<IrrepSet>& windows)
{
    require_inputs(ring, S, epsilon);
    for (const auto& w : windows) {
        if (w.empty())
            throw PreconditionError("windows must be nonempty");
        for (const auto& u : w)
            ring.require_valid(u);
    }
    return scan(ring, S, epsilon, windows, "user", 0);
}

std::vector<ProfileRow> isoperimetric_profile(const FusionRing& ring, const IrrepSet& S, std::int64_t max_radius)
{
    if (S.empty())
        throw PreconditionError("S must be nonempty");
    std::vector<ProfileRow> rows;
    auto bs = balls(ring, S, max_radius);
    for (std::size_t k = 0; k < bs.size(); ++k)
        rows.push_back(profile_row(ring, conjugation_closure(ring, bs[k]), S, static_cast<std::int64_t>(k)));
    return rows;
}

bool verify_folner_certificate(const FusionRing& ring, const FolnerCertificate& cert)
{
    const auto& F = cert.F;
    if (F.empty() || !is_conjugation_closed(ring, F))
        return false;
    std::int64_t window = 0;
    for (const auto& u : F)
        window += static_cast<std::int64_t>(ring.dim(u)) * ring.dim(u);

    auto leaves = [&](const IrrepLabel& u, bool inside) {
        for (const auto& s : cert.S)
            for (const auto& t : ring.product(u, s))
                if (t.multiplicity > 0 && F.contains(t.label) != inside)
                    return true;
        return false;
    };
    std::int64_t boundary = 0;
    for (const auto& u : F)
        if (leaves(u, true))
            boundary += static_cast<std::int64_t>(ring.dim(u)) * ring.dim(u);
    // outside labels with an S-product reaching F all occur in some F (x) conj(S)
    std::vector<IrrepLabel> candidates;
    for (const auto& v : F)
        for (const auto& s : cert.S)
            for (const auto& t : ring.product(v, ring.conj(s)))
                if (!F.contains(t.label))
                    candidates.push_back(t.label);
    for (const auto& w : IrrepSet(std::move(candidates)))
        if (leaves(w, false))
            boundary += static_cast<std::int64_t>(ring.dim(w)) * ring.dim(w);

    if (window != cert.window_weight || boundary != cert.boundary_weight)
        return false;
    return mpz_class(boundary) * cert.epsilon.get_den() < cert.epsilon.get_num() * mpz_class(window);
}

double fit_decay_exponent(const std::vector<ProfileRow>& rows, std::int64_t rmin, std::int64_t rmax)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const auto& r : rows) {
        if (r.radius < rmin || r.radius > rmax || sgn(r.ratio) == 0 || r.radius <= 0)
            continue;
        double x = std::log(static_cast<double>(r.radius));
        double y = -std::log(r.ratio.get_d());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2)
        throw PreconditionError("decay fit needs at least two rows with nonzero ratio");
    double n = static_cast<double>(count);
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string profile_csv(const std::vector<ProfileRow>& rows)
{
    std::ostringstream out;
    out << "radius,weight,boundary,symmetric_boundary,ratio,ratio_decimal\n";
    for (const auto& r : rows)
        out << r.radius << ',' << r.weight << ',' << r.boundary << ',' << r.symmetric_boundary << ','
            << rational_string(r.ratio) << ',' << std::setprecision(12) << r.ratio.get_d() << '\n';
    return out.str();
}

} // namespace folnerlab
