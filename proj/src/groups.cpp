#include "folnerlab/groups.hpp"

#include <algorithm>
#include <charconv>

#include "folnerlab/error.hpp"

namespace folnerlab {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m)
{
    if (m == 0)
        return v;
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view s, std::string_view context)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw PreconditionError("malformed group name '" + std::string(context) + "'");
    return v;
}

/// Range [-n, n] of a coordinate, or all residues when it wraps.
std::vector<std::int64_t> coordinate_range(std::int64_t modulus, std::int64_t n)
{
    std::vector<std::int64_t> out;
    if (modulus != 0 && 2 * n + 1 >= modulus) {
        for (std::int64_t r = 0; r < modulus; ++r)
            out.push_back(r);
        return out;
    }
    for (std::int64_t v = -n; v <= n; ++v)
        out.push_back(mod(v, modulus));
    std::sort(out.begin(), out.end());
    return out;
}

std::string factor_name(std::int64_t m)
{
    return m == 0 ? "Z" : "Z/" + std::to_string(m);
}

} // namespace

IrrepLabel Group::identity() const
{
    return IrrepLabel(std::vector<std::int64_t>(arity(), 0));
}

bool Group::is_element(const IrrepLabel& a) const
{
    if (a.arity() != arity())
        return false;
    const auto& ms = moduli();
    for (std::size_t i = 0; i < arity(); ++i)
        if (ms[i] != 0 && (a[i] < 0 || a[i] >= ms[i]))
            return false;
    return true;
}

IrrepLabel Group::normalize(const IrrepLabel& a) const
{
    if (a.arity() != arity())
        throw InvalidLabel("label " + a.to_string() + " has wrong arity for group " + name());
    IrrepLabel out = a;
    const auto& ms = moduli();
    for (std::size_t i = 0; i < arity(); ++i)
        out[i] = mod(a[i], ms[i]);
    return out;
}

std::optional<std::uint64_t> Group::order() const
{
    std::uint64_t n = 1;
    for (auto m : moduli()) {
        if (m == 0)
            return std::nullopt;
        n *= static_cast<std::uint64_t>(m);
    }
    return n;
}

std::vector<IrrepLabel> Group::elements() const
{
    if (!order())
        throw PreconditionError("group " + name() + " is infinite");
    const auto& ms = moduli();
    std::vector<IrrepLabel> out;
    std::vector<std::int64_t> c(arity(), 0);
    for (;;) {
        out.emplace_back(c);
        std::size_t i = arity();
        while (i > 0) {
            --i;
            if (++c[i] < ms[i])
                break;
            c[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli))
{
    if (moduli_.empty() || moduli_.size() > IrrepLabel::max_arity)
        throw PreconditionError("abelian groups support one to three cyclic factors");
    for (auto m : moduli_)
        if (m < 0 || m == 1)
            throw PreconditionError("cyclic factor modulus must be 0 (infinite) or at least 2");
}

std::string AbelianGroup::name() const
{
    std::string out;
    for (std::size_t i = 0; i < moduli_.size();) {
        std::size_t j = i;
        while (j < moduli_.size() && moduli_[j] == moduli_[i])
            ++j;
        std::size_t count = j - i;
        if (!out.empty())
            out += "x";
        if (count == 1)
            out += factor_name(moduli_[i]);
        else if (moduli_[i] == 0)
            out += "Z^" + std::to_string(count);
        else
            out += "(" + factor_name(moduli_[i]) + ")^" + std::to_string(count);
        i = j;
    }
    return out;
}

IrrepLabel AbelianGroup::multiply(const IrrepLabel& a, const IrrepLabel& b) const
{
    IrrepLabel out = a;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        out[i] = mod(a[i] + b[i], moduli_[i]);
    return out;
}

IrrepLabel AbelianGroup::inverse(const IrrepLabel& a) const
{
    IrrepLabel out = a;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        out[i] = mod(-a[i], moduli_[i]);
    return out;
}

std::shared_ptr<const Group> AbelianGroup::quotient(std::int64_t m) const
{
    if (m < 2)
        throw PreconditionError("quotient modulus must be at least 2");
    std::vector<std::int64_t> out = moduli_;
    bool reduced = false;
    for (auto& x : out) {
        if (x == 0) {
            x = m;
            reduced = true;
        }
    }
    if (!reduced)
        throw PreconditionError("group " + name() + " has no integer coordinate to reduce");
    return std::make_shared<AbelianGroup>(std::move(out));
}

std::vector<IrrepLabel> AbelianGroup::box(std::int64_t n) const
{
    if (n < 0)
        throw PreconditionError("window radius must be nonnegative");
    std::vector<std::vector<std::int64_t>> ranges;
    for (auto m : moduli_)
        ranges.push_back(coordinate_range(m, n));
    std::vector<IrrepLabel> out;
    std::vector<std::size_t> idx(ranges.size(), 0);
    for (;;) {
        std::vector<std::int64_t> c(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i)
            c[i] = ranges[i][idx[i]];
        out.emplace_back(c);
        std::size_t i = ranges.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < ranges[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> AbelianGroup::generators() const
{
    std::vector<IrrepLabel> out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::vector<std::int64_t> c(moduli_.size(), 0);
        c[i] = 1;
        out.emplace_back(c);
    }
    return out;
}

HeisenbergGroup::HeisenbergGroup(std::int64_t modulus) : m_(modulus), moduli_{modulus, modulus, modulus}
{
    if (m_ < 0 || m_ == 1)
        throw PreconditionError("Heisenberg modulus must be 0 (integral) or at least 2");
}

std::string HeisenbergGroup::name() const
{
    return m_ == 0 ? "heisenberg" : "heisenberg/" + std::to_string(m_);
}

IrrepLabel HeisenbergGroup::multiply(const IrrepLabel& a, const IrrepLabel& b) const
{
    return IrrepLabel{mod(a[0] + b[0], m_), mod(a[1] + b[1], m_), mod(a[2] + b[2] + a[0] * b[1], m_)};
}

IrrepLabel HeisenbergGroup::inverse(const IrrepLabel& a) const
{
    return IrrepLabel{mod(-a[0], m_), mod(-a[1], m_), mod(-a[2] + a[0] * a[1], m_)};
}

std::shared_ptr<const Group> HeisenbergGroup::quotient(std::int64_t m) const
{
    if (m < 2)
        throw PreconditionError("quotient modulus must be at least 2");
    if (m_ != 0)
        throw PreconditionError("group " + name() + " is already finite");
    return std::make_shared<HeisenbergGroup>(m);
}

std::vector<IrrepLabel> HeisenbergGroup::box(std::int64_t n) const
{
    if (n < 0)
        throw PreconditionError("window radius must be nonnegative");
    auto ab = coordinate_range(m_, n);
    auto cs = coordinate_range(m_, n * n);
    std::vector<IrrepLabel> out;
    for (auto a : ab)
        for (auto b : ab)
            for (auto c : cs)
                out.push_back(IrrepLabel{a, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> HeisenbergGroup::generators() const
{
    return {IrrepLabel{1, 0, 0}, IrrepLabel{0, 1, 0}};
}

std::shared_ptr<const Group> parse_group(std::string_view name)
{
    if (name == "heisenberg")
        return std::make_shared<HeisenbergGroup>(0);
    if (name.starts_with("heisenberg/"))
        return std::make_shared<HeisenbergGroup>(parse_int(name.substr(11), name));

    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    while (pos <= name.size()) {
        std::size_t next = name.find('x', pos);
        std::string_view factor = name.substr(pos, next == std::string_view::npos ? name.npos : next - pos);
        std::int64_t count = 1;
        std::int64_t m = 0;
        std::string_view base = factor;
        if (auto caret = factor.rfind('^'); caret != std::string_view::npos) {
            count = parse_int(factor.substr(caret + 1), name);
            base = factor.substr(0, caret);
            if (base.size() >= 2 && base.front() == '(' && base.back() == ')')
                base = base.substr(1, base.size() - 2);
        }
        if (base == "Z")
            m = 0;
        else if (base.starts_with("Z/"))
            m = parse_int(base.substr(2), name);
        else
            throw PreconditionError("unknown group '" + std::string(name) + "'");
        if (count < 1)
            throw PreconditionError("malformed group name '" + std::string(name) + "'");
        for (std::int64_t i = 0; i < count; ++i)
            moduli.push_back(m);
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return std::make_shared<AbelianGroup>(std::move(moduli));
}

} // namespace folnerlab
