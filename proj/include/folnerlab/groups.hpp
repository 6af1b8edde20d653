#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folnerlab/label.hpp"

namespace folnerlab {

/// Discrete group with elements in normal form. Each coordinate carries a
/// modulus (0 for an integer coordinate); finite coordinates are stored in [0, m).
class Group {
public:
    virtual ~Group() = default;

    /// Canonical name without the "group:" prefix, e.g. "Z^2", "ZxZ/2", "heisenberg/9".
    virtual std::string name() const = 0;
    virtual std::size_t arity() const = 0;
    virtual const std::vector<std::int64_t>& moduli() const = 0;

    virtual IrrepLabel multiply(const IrrepLabel& a, const IrrepLabel& b) const = 0;
    virtual IrrepLabel inverse(const IrrepLabel& a) const = 0;

    /// Same group with every integer coordinate replaced by Z/m and every
    /// finite coordinate of modulus M replaced by gcd-compatible m (M % m == 0 required).
    virtual std::shared_ptr<const Group> quotient(std::int64_t m) const = 0;

    /// Symmetric window of "radius" n in normal-form coordinates.
    virtual std::vector<IrrepLabel> box(std::int64_t n) const = 0;
    virtual std::vector<IrrepLabel> generators() const = 0;

    IrrepLabel identity() const;
    bool is_element(const IrrepLabel& a) const;
    /// Reduces finite coordinates into [0, m). Throws InvalidLabel on arity mismatch.
    IrrepLabel normalize(const IrrepLabel& a) const;
    std::optional<std::uint64_t> order() const;
    /// All elements, sorted. Throws PreconditionError for infinite groups.
    std::vector<IrrepLabel> elements() const;
};

/// Z^a x Z/m_1 x ... ; at most three factors.
class AbelianGroup final : public Group {
public:
    explicit AbelianGroup(std::vector<std::int64_t> moduli);

    std::string name() const override;
    std::size_t arity() const override { return moduli_.size(); }
    const std::vector<std::int64_t>& moduli() const override { return moduli_; }
    IrrepLabel multiply(const IrrepLabel& a, const IrrepLabel& b) const override;
    IrrepLabel inverse(const IrrepLabel& a) const override;
    std::shared_ptr<const Group> quotient(std::int64_t m) const override;
    std::vector<IrrepLabel> box(std::int64_t n) const override;
    std::vector<IrrepLabel> generators() const override;

private:
    std::vector<std::int64_t> moduli_;
};

/// Discrete Heisenberg group as triples (a,b,c) ~ [[1,a,c],[0,1,b],[0,0,1]],
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'); optionally reduced mod m.
class HeisenbergGroup final : public Group {
public:
    explicit HeisenbergGroup(std::int64_t modulus = 0);

    std::string name() const override;
    std::size_t arity() const override { return 3; }
    const std::vector<std::int64_t>& moduli() const override { return moduli_; }
    IrrepLabel multiply(const IrrepLabel& a, const IrrepLabel& b) const override;
    IrrepLabel inverse(const IrrepLabel& a) const override;
    std::shared_ptr<const Group> quotient(std::int64_t m) const override;
    std::vector<IrrepLabel> box(std::int64_t n) const override;
    std::vector<IrrepLabel> generators() const override;

private:
    std::int64_t m_;
    std::vector<std::int64_t> moduli_;
};

/// Parses "Z", "Z^2", "Z/6", "ZxZ/2", "(Z/9)^2", "Z/9xZ/2", "heisenberg", "heisenberg/5".
std::shared_ptr<const Group> parse_group(std::string_view name);

} // namespace folnerlab
