#include "folnerlab/label.hpp"

#include <algorithm>
#include <iterator>

#include "folnerlab/error.hpp"

namespace folnerlab {

std::string to_string(Side side)
{
    return side == Side::left ? "left" : "right";
}

Side parse_side(const std::string& text)
{
    if (text == "left")
        return Side::left;
    if (text == "right")
        return Side::right;
    throw PreconditionError("side must be 'left' or 'right', got '" + text + "'");
}

IrrepLabel::IrrepLabel(std::initializer_list<std::int64_t> coords)
{
    if (coords.size() == 0 || coords.size() > max_arity)
        throw InvalidLabel("label arity must be between 1 and 3");
    std::copy(coords.begin(), coords.end(), coords_.begin());
    arity_ = static_cast<std::uint8_t>(coords.size());
}

IrrepLabel::IrrepLabel(const std::vector<std::int64_t>& coords)
{
    if (coords.empty() || coords.size() > max_arity)
        throw InvalidLabel("label arity must be between 1 and 3");
    std::copy(coords.begin(), coords.end(), coords_.begin());
    arity_ = static_cast<std::uint8_t>(coords.size());
}

std::string IrrepLabel::to_string() const
{
    if (arity_ == 1)
        return std::to_string(coords_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < arity_; ++i) {
        if (i)
            s += ",";
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

std::size_t IrrepLabelHash::operator()(const IrrepLabel& l) const noexcept
{
    std::size_t h = l.arity();
    for (std::size_t i = 0; i < l.arity(); ++i)
        h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::int64_t>{}(l[i]);
    return h;
}

IrrepSet::IrrepSet(std::initializer_list<IrrepLabel> labels) : IrrepSet(std::vector<IrrepLabel>(labels)) {}

IrrepSet::IrrepSet(std::vector<IrrepLabel> labels) : items_(std::move(labels))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool IrrepSet::contains(const IrrepLabel& l) const
{
    return std::binary_search(items_.begin(), items_.end(), l);
}

std::size_t IrrepSet::index_of(const IrrepLabel& l) const
{
    auto it = std::lower_bound(items_.begin(), items_.end(), l);
    if (it == items_.end() || *it != l)
        return items_.size();
    return static_cast<std::size_t>(it - items_.begin());
}

bool IrrepSet::is_subset_of(const IrrepSet& other) const
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::string IrrepSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i)
            s += ",";
        s += items_[i].to_string();
    }
    return s + "}";
}

IrrepSet set_union(const IrrepSet& a, const IrrepSet& b)
{
    std::vector<IrrepLabel> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IrrepSet(std::move(out));
}

IrrepSet set_difference(const IrrepSet& a, const IrrepSet& b)
{
    std::vector<IrrepLabel> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IrrepSet(std::move(out));
}

IrrepSet set_intersection(const IrrepSet& a, const IrrepSet& b)
{
    std::vector<IrrepLabel> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IrrepSet(std::move(out));
}

} // namespace folnerlab
