#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "folnerlab/polalg.hpp"
#include "folnerlab/reldim.hpp"

namespace folnerlab {

/// Coordinate-wise reduction of a group algebra onto its quotient mod m.
class QuotientMap {
public:
    QuotientMap(std::shared_ptr<const GroupAlgebra> source, std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const std::shared_ptr<const GroupAlgebra>& source() const { return source_; }
    const std::shared_ptr<const GroupAlgebra>& target() const { return target_; }
    const Group& target_group() const { return target_->group_ring().group(); }

    IrrepLabel push(const IrrepLabel& u) const;
    IrrepSet push(const IrrepSet& E) const;
    AlgebraElement push(const AlgebraElement& a) const;
    MatrixOverPol push(const MatrixOverPol& T) const;

    /// push(u v) == push(u) push(v) for all u, v in labels.
    bool respects_products(const IrrepSet& labels) const;

private:
    std::shared_ptr<const GroupAlgebra> source_;
    std::shared_ptr<const GroupAlgebra> target_;
    std::int64_t modulus_;
};

/// Quotients by an increasing divisibility chain of moduli.
class QuotientTower {
public:
    QuotientTower(std::shared_ptr<const GroupAlgebra> source, const std::vector<std::int64_t>& moduli);

    const std::vector<QuotientMap>& levels() const { return levels_; }
    const std::shared_ptr<const GroupAlgebra>& source() const { return source_; }

    /// pi_i == pi_ij o pi_j on labels for all i < j.
    bool composites_commute(const IrrepSet& labels) const;

private:
    std::shared_ptr<const GroupAlgebra> source_;
    std::vector<QuotientMap> levels_;
};

/// F u S u supp(x (x) s) over x in F, s in S.
IrrepSet omega_set(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S);

/// True iff the map is injective on F.
bool local_injectivity_check(const QuotientMap& map, const IrrepSet& F);

struct HaarLevel {
    std::int64_t modulus = 0;
    Scalar value;
    bool omega_injective = false;
};

struct HaarReport {
    Scalar source_value;
    IrrepSet omega; ///< supp(a) u {e}
    std::vector<HaarLevel> levels;
    std::optional<std::size_t> first_injective;
    bool eventual_equality = false; ///< all values from first_injective on equal source_value
};

HaarReport haar_approx_sequence(const AlgebraElement& a, const QuotientTower& tower);

struct TowerLevel {
    std::int64_t modulus = 0;
    std::string target;
    bool omega_injective = false;
    std::optional<mpq_class> quotient_dim;
    std::optional<std::string> error;
    // checked only at omega-injective levels
    bool support_pushforward = false;
    bool boundary_pushforward = false;
    bool weights_preserved = false;
    bool transport_bound = false;
    mpq_class transport_gap; ///< |source lower - quotient dim|
};

struct TowerReport {
    IrrepSet window;
    IrrepSet support;
    IrrepSet omega;
    DimensionEstimate source;
    mpq_class transport_limit; ///< 2 n |d_S F| / |F|
    bool composites_commute = false;
    std::vector<TowerLevel> levels;
    std::optional<std::size_t> first_injective;
    bool identities_hold = false; ///< every check passed at every omega-injective level
};

/// Quotient levels whose group order times n exceeds this are reported as errors.
inline constexpr std::uint64_t max_quotient_size = 20000;

TowerReport tower_kernel_dims(const MatrixOverPol& T, const QuotientTower& tower, const IrrepSet& F,
                              Side side = Side::right);

} // namespace folnerlab
