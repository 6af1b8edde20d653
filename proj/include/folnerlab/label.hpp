#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace folnerlab {

/// Which factor an operand multiplies from. `right` is x -> x*a, matching
/// products u (x) v with u in the window and v in the support.
enum class Side { left, right };

std::string to_string(Side side);
Side parse_side(const std::string& text);

/// Label of an irreducible class. Providers fix the arity: one coordinate for
/// su2 spins, cyclic groups and finite indices; up to three for group normal forms.
class IrrepLabel {
public:
    static constexpr std::size_t max_arity = 3;

    IrrepLabel() = default;
    explicit IrrepLabel(std::int64_t value) : coords_{value, 0, 0}, arity_(1) {}
    IrrepLabel(std::initializer_list<std::int64_t> coords);
    explicit IrrepLabel(const std::vector<std::int64_t>& coords);

    std::size_t arity() const { return arity_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    std::vector<std::int64_t> coords() const { return {coords_.begin(), coords_.begin() + arity_}; }

    auto operator<=>(const IrrepLabel&) const = default;
    bool operator==(const IrrepLabel&) const = default;

    /// "3" for arity one, "(1,0,-2)" otherwise.
    std::string to_string() const;

private:
    std::array<std::int64_t, max_arity> coords_{};
    std::uint8_t arity_ = 0;
};

struct IrrepLabelHash {
    std::size_t operator()(const IrrepLabel& l) const noexcept;
};

/// Finite, sorted, duplicate-free set of labels.
class IrrepSet {
public:
    using const_iterator = std::vector<IrrepLabel>::const_iterator;

    IrrepSet() = default;
    IrrepSet(std::initializer_list<IrrepLabel> labels);
    explicit IrrepSet(std::vector<IrrepLabel> labels);

    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const IrrepLabel& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<IrrepLabel>& labels() const { return items_; }

    bool contains(const IrrepLabel& l) const;
    /// Position of `l` in sorted order, or size() when absent.
    std::size_t index_of(const IrrepLabel& l) const;
    bool is_subset_of(const IrrepSet& other) const;

    bool operator==(const IrrepSet&) const = default;

    std::string to_string() const;

private:
    std::vector<IrrepLabel> items_;
};

IrrepSet set_union(const IrrepSet& a, const IrrepSet& b);
IrrepSet set_difference(const IrrepSet& a, const IrrepSet& b);
IrrepSet set_intersection(const IrrepSet& a, const IrrepSet& b);

} // namespace folnerlab
