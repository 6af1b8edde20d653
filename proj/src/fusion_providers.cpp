#include <algorithm>
#include <cmath>
#include <numeric>

#include "folnerlab/error.hpp"
#include "folnerlab/fusion.hpp"

namespace folnerlab {

void FusionRing::require_valid(const IrrepLabel& u) const
{
    if (!is_valid(u))
        throw InvalidLabel("label " + u.to_string() + " is not an irreducible of " + tag());
}

// ---- su2 -----------------------------------------------------------------

bool Su2Ring::is_valid(const IrrepLabel& u) const
{
    return u.arity() == 1 && u[0] >= 0;
}

int Su2Ring::dim(const IrrepLabel& u) const
{
    require_valid(u);
    return static_cast<int>(u[0] + 1);
}

IrrepLabel Su2Ring::conj(const IrrepLabel& u) const
{
    require_valid(u);
    return u;
}

FusionProduct Su2Ring::product(const IrrepLabel& u, const IrrepLabel& v) const
{
    std::int64_t k = u[0];
    std::int64_t l = v[0];
    FusionProduct out;
    for (std::int64_t c = std::abs(k - l); c <= k + l; c += 2)
        out.push_back({IrrepLabel(c), 1});
    return out;
}

IrrepSet Su2Ring::all_irreps() const
{
    throw PreconditionError("su2 has infinitely many irreducibles");
}

IrrepSet Su2Ring::standard_window(std::int64_t n) const
{
    if (n < 0)
        throw PreconditionError("window radius must be nonnegative");
    std::vector<IrrepLabel> out;
    for (std::int64_t k = 0; k <= n; ++k)
        out.emplace_back(k);
    return IrrepSet(std::move(out));
}

nlohmann::json Su2Ring::label_to_json(const IrrepLabel& u) const
{
    return u[0];
}

IrrepLabel Su2Ring::label_from_json(const nlohmann::json& j) const
{
    if (!j.is_number_integer())
        throw InvalidLabel("su2 labels are nonnegative integers, got " + j.dump());
    IrrepLabel u(j.get<std::int64_t>());
    require_valid(u);
    return u;
}

// ---- discrete groups --------------------------------------------------------

GroupFusionRing::GroupFusionRing(std::shared_ptr<const Group> group) : group_(std::move(group)) {}

int GroupFusionRing::dim(const IrrepLabel& u) const
{
    require_valid(u);
    return 1;
}

IrrepLabel GroupFusionRing::conj(const IrrepLabel& u) const
{
    require_valid(u);
    return group_->inverse(u);
}

FusionProduct GroupFusionRing::product(const IrrepLabel& u, const IrrepLabel& v) const
{
    return {{group_->multiply(u, v), 1}};
}

IrrepSet GroupFusionRing::all_irreps() const
{
    return IrrepSet(group_->elements());
}

IrrepSet GroupFusionRing::standard_window(std::int64_t n) const
{
    // boxes of the Heisenberg group are not closed under inversion
    return conjugation_closure(*this, IrrepSet(group_->box(n)));
}

nlohmann::json GroupFusionRing::label_to_json(const IrrepLabel& u) const
{
    if (u.arity() == 1)
        return u[0];
    return u.coords();
}

IrrepLabel GroupFusionRing::label_from_json(const nlohmann::json& j) const
{
    IrrepLabel u;
    if (j.is_number_integer())
        u = IrrepLabel(j.get<std::int64_t>());
    else if (j.is_array() && !j.empty() && j.size() <= IrrepLabel::max_arity &&
             std::all_of(j.begin(), j.end(), [](const auto& x) { return x.is_number_integer(); }))
        u = IrrepLabel(j.get<std::vector<std::int64_t>>());
    else
        throw InvalidLabel("group labels are integers or integer arrays, got " + j.dump());
    if (u.arity() != group_->arity())
        throw InvalidLabel("label " + j.dump() + " has wrong arity for " + tag());
    u = group_->normalize(u);
    require_valid(u);
    return u;
}

// ---- finite groups ----------------------------------------------------------

FiniteGroupData make_s3_data()
{
    FiniteGroupData d;
    d.name = "S3";
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int order = static_cast<int>(perms.size());
    auto index_of = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    d.mult_table.assign(order, std::vector<int>(order));
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
            std::array<int, 3> gh{};
            for (int x = 0; x < 3; ++x)
                gh[x] = perms[g][perms[h][x]];
            d.mult_table[g][h] = index_of(gh);
        }
    d.identity = 0;

    auto sign = [](const std::array<int, 3>& q) {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                inversions += q[i] > q[j];
        return inversions % 2 == 0 ? 1.0 : -1.0;
    };

    // orthonormal basis of the plane x + y + z = 0
    const double f[2][3] = {{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.0},
                            {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)}};

    d.irrep_names = {"triv", "sgn", "std"};
    d.dims = {1, 1, 2};
    d.irreps.resize(3);
    for (int g = 0; g < order; ++g) {
        d.irreps[0].push_back({1.0});
        d.irreps[1].push_back({sign(perms[g])});
        // permutation matrix sends e_x to e_{g(x)}
        std::vector<std::complex<double>> m(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double s = 0;
                for (int x = 0; x < 3; ++x)
                    s += f[i][perms[g][x]] * f[j][x];
                m[i * 2 + j] = s;
            }
        d.irreps[2].push_back(std::move(m));
    }
    return d;
}

namespace {

std::vector<std::complex<double>> character(const FiniteGroupData& d, std::size_t alpha)
{
    std::vector<std::complex<double>> chi;
    const int n = d.dims[alpha];
    for (const auto& m : d.irreps[alpha]) {
        std::complex<double> t = 0;
        for (int i = 0; i < n; ++i)
            t += m[i * n + i];
        chi.push_back(t);
    }
    return chi;
}

} // namespace

FiniteFusionRing::FiniteFusionRing(std::shared_ptr<const FiniteGroupData> data) : data_(std::move(data))
{
    const std::size_t r = data_->irreps.size();
    const double order = static_cast<double>(data_->order());
    std::vector<std::vector<std::complex<double>>> chars;
    for (std::size_t a = 0; a < r; ++a)
        chars.push_back(character(*data_, a));

    conj_.assign(r, -1);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            double diff = 0;
            for (std::size_t g = 0; g < data_->order(); ++g)
                diff += std::abs(std::conj(chars[a][g]) - chars[b][g]);
            if (diff < 1e-9)
                conj_[a] = static_cast<int>(b);
        }
    if (std::find(conj_.begin(), conj_.end(), -1) != conj_.end())
        throw InternalError("character table of " + data_->name + " is not closed under conjugation");

    table_.assign(r, std::vector<FusionProduct>(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                std::complex<double> s = 0;
                for (std::size_t g = 0; g < data_->order(); ++g)
                    s += chars[a][g] * chars[b][g] * std::conj(chars[c][g]);
                long mult = std::lround(s.real() / order);
                if (mult > 0)
                    table_[a][b].push_back({IrrepLabel(static_cast<std::int64_t>(c)), static_cast<int>(mult)});
            }
}

bool FiniteFusionRing::is_valid(const IrrepLabel& u) const
{
    return u.arity() == 1 && u[0] >= 0 && u[0] < static_cast<std::int64_t>(data_->irreps.size());
}

int FiniteFusionRing::dim(const IrrepLabel& u) const
{
    require_valid(u);
    return data_->dims[static_cast<std::size_t>(u[0])];
}

IrrepLabel FiniteFusionRing::conj(const IrrepLabel& u) const
{
    require_valid(u);
    return IrrepLabel(static_cast<std::int64_t>(conj_[static_cast<std::size_t>(u[0])]));
}

FusionProduct FiniteFusionRing::product(const IrrepLabel& u, const IrrepLabel& v) const
{
    return table_[static_cast<std::size_t>(u[0])][static_cast<std::size_t>(v[0])];
}

IrrepSet FiniteFusionRing::all_irreps() const
{
    std::vector<IrrepLabel> out;
    for (std::size_t a = 0; a < data_->irreps.size(); ++a)
        out.emplace_back(static_cast<std::int64_t>(a));
    return IrrepSet(std::move(out));
}

std::vector<IrrepLabel> FiniteFusionRing::generators() const
{
    auto all = all_irreps();
    return {all.begin(), all.end()};
}

nlohmann::json FiniteFusionRing::label_to_json(const IrrepLabel& u) const
{
    require_valid(u);
    return data_->irrep_names[static_cast<std::size_t>(u[0])];
}

IrrepLabel FiniteFusionRing::label_from_json(const nlohmann::json& j) const
{
    if (j.is_string()) {
        const auto& names = data_->irrep_names;
        auto it = std::find(names.begin(), names.end(), j.get<std::string>());
        if (it == names.end())
            throw InvalidLabel("unknown irreducible '" + j.get<std::string>() + "' of " + tag());
        return IrrepLabel(static_cast<std::int64_t>(it - names.begin()));
    }
    if (j.is_number_integer()) {
        IrrepLabel u(j.get<std::int64_t>());
        require_valid(u);
        return u;
    }
    throw InvalidLabel("finite ring labels are names or indices, got " + j.dump());
}

std::shared_ptr<const FusionRing> make_ring(std::string_view tag)
{
    if (tag == "su2")
        return std::make_shared<Su2Ring>();
    if (tag.starts_with("group:"))
        return std::make_shared<GroupFusionRing>(parse_group(tag.substr(6)));
    if (tag == "finite:S3")
        return std::make_shared<FiniteFusionRing>(std::make_shared<FiniteGroupData>(make_s3_data()));
    throw PreconditionError("unknown ring '" + std::string(tag) + "' (expected su2, group:<G> or finite:S3)");
}

} // namespace folnerlab
