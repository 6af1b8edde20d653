#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "folnerlab/groups.hpp"
#include "folnerlab/label.hpp"

namespace folnerlab {

struct FusionTerm {
    IrrepLabel label;
    int multiplicity = 0;
    bool operator==(const FusionTerm&) const = default;
};

/// supp(u (x) v) with multiplicities N_{uv}^w, sorted by label.
using FusionProduct = std::vector<FusionTerm>;

/// Fusion ring Z[Irred(G)] of a Kac-type compact quantum group. Irreducibles are
/// produced on demand; an infinite ring is never enumerated. Immutable after
/// construction and safe for concurrent reads.
class FusionRing {
public:
    virtual ~FusionRing() = default;

    /// Provider tag: "su2", "group:<name>" or "finite:<name>".
    virtual std::string tag() const = 0;
    virtual IrrepLabel unit() const = 0;
    virtual bool is_valid(const IrrepLabel& u) const = 0;
    /// Matrix size n_u.
    virtual int dim(const IrrepLabel& u) const = 0;
    virtual IrrepLabel conj(const IrrepLabel& u) const = 0;
    virtual FusionProduct product(const IrrepLabel& u, const IrrepLabel& v) const = 0;

    virtual bool is_finite() const = 0;
    /// Every irreducible; PreconditionError for infinite rings.
    virtual IrrepSet all_irreps() const = 0;
    /// Provider-natural conjugation-closed window of radius n ({0..n} for su2,
    /// inversion-closed boxes for groups, everything for finite rings).
    virtual IrrepSet standard_window(std::int64_t n) const = 0;
    virtual std::vector<IrrepLabel> generators() const = 0;

    virtual nlohmann::json label_to_json(const IrrepLabel& u) const = 0;
    virtual IrrepLabel label_from_json(const nlohmann::json& j) const = 0;

    /// Throws InvalidLabel unless u belongs to the ring.
    void require_valid(const IrrepLabel& u) const;
};

/// su2: labels k = twice the spin, n_k = k + 1, Clebsch-Gordan fusion rule.
class Su2Ring final : public FusionRing {
public:
    std::string tag() const override { return "su2"; }
    IrrepLabel unit() const override { return IrrepLabel(0); }
    bool is_valid(const IrrepLabel& u) const override;
    int dim(const IrrepLabel& u) const override;
    IrrepLabel conj(const IrrepLabel& u) const override;
    FusionProduct product(const IrrepLabel& u, const IrrepLabel& v) const override;
    bool is_finite() const override { return false; }
    IrrepSet all_irreps() const override;
    IrrepSet standard_window(std::int64_t n) const override;
    std::vector<IrrepLabel> generators() const override { return {IrrepLabel(1)}; }
    nlohmann::json label_to_json(const IrrepLabel& u) const override;
    IrrepLabel label_from_json(const nlohmann::json& j) const override;
};

/// Fusion ring of the dual of a discrete group: labels are group elements,
/// all of dimension one, product = group law, conjugation = inverse.
class GroupFusionRing final : public FusionRing {
public:
    explicit GroupFusionRing(std::shared_ptr<const Group> group);

    const Group& group() const { return *group_; }
    std::shared_ptr<const Group> group_ptr() const { return group_; }

    std::string tag() const override { return "group:" + group_->name(); }
    IrrepLabel unit() const override { return group_->identity(); }
    bool is_valid(const IrrepLabel& u) const override { return group_->is_element(u); }
    int dim(const IrrepLabel& u) const override;
    IrrepLabel conj(const IrrepLabel& u) const override;
    FusionProduct product(const IrrepLabel& u, const IrrepLabel& v) const override;
    bool is_finite() const override { return group_->order().has_value(); }
    IrrepSet all_irreps() const override;
    IrrepSet standard_window(std::int64_t n) const override;
    std::vector<IrrepLabel> generators() const override { return group_->generators(); }
    nlohmann::json label_to_json(const IrrepLabel& u) const override;
    IrrepLabel label_from_json(const nlohmann::json& j) const override;

private:
    std::shared_ptr<const Group> group_;
};

/// Unitary irreducible representations of a finite group, stored as explicit
/// matrices on every group element.
struct FiniteGroupData {
    std::string name;
    std::vector<std::vector<int>> mult_table; ///< mult_table[g][h] = index of gh
    int identity = 0;
    std::vector<std::string> irrep_names;
    /// irreps[alpha][g] is the n_alpha x n_alpha matrix, row-major.
    std::vector<std::vector<std::vector<std::complex<double>>>> irreps;
    std::vector<int> dims;

    std::size_t order() const { return mult_table.size(); }
};

/// The symmetric group S3 with trivial, sign and 2-dimensional standard representation.
FiniteGroupData make_s3_data();

/// Representation ring of a finite group (the fusion ring of the function
/// algebra C(G)); multiplicities come from character inner products.
class FiniteFusionRing final : public FusionRing {
public:
    explicit FiniteFusionRing(std::shared_ptr<const FiniteGroupData> data);

    const FiniteGroupData& data() const { return *data_; }
    std::shared_ptr<const FiniteGroupData> data_ptr() const { return data_; }

    std::string tag() const override { return "finite:" + data_->name; }
    IrrepLabel unit() const override { return IrrepLabel(0); }
    bool is_valid(const IrrepLabel& u) const override;
    int dim(const IrrepLabel& u) const override;
    IrrepLabel conj(const IrrepLabel& u) const override;
    FusionProduct product(const IrrepLabel& u, const IrrepLabel& v) const override;
    bool is_finite() const override { return true; }
    IrrepSet all_irreps() const override;
    IrrepSet standard_window(std::int64_t) const override { return all_irreps(); }
    std::vector<IrrepLabel> generators() const override;
    nlohmann::json label_to_json(const IrrepLabel& u) const override;
    IrrepLabel label_from_json(const nlohmann::json& j) const override;

private:
    std::shared_ptr<const FiniteGroupData> data_;
    std::vector<int> conj_;
    std::vector<std::vector<FusionProduct>> table_;
};

/// "su2", "group:<name>", "finite:S3".
std::shared_ptr<const FusionRing> make_ring(std::string_view tag);

// ---- isoperimetry -------------------------------------------------------

/// product() after validating both labels.
FusionProduct product_support(const FusionRing& ring, const IrrepLabel& u, const IrrepLabel& v);

/// sum of n_u^2 over F.
std::int64_t weighted_size(const FusionRing& ring, const IrrepSet& F);

IrrepSet conjugate_set(const FusionRing& ring, const IrrepSet& F);
/// F together with its conjugates.
IrrepSet conjugation_closure(const FusionRing& ring, const IrrepSet& F);
bool is_conjugation_closed(const FusionRing& ring, const IrrepSet& F);

struct BoundaryDecomposition {
    IrrepSet interior;
    IrrepSet boundary;
    IrrepSet coboundary; ///< boundary of the complement
    IrrepSet symmetric_boundary;
};

/// Interior and boundary of F relative to S. With Side::right the products are
/// u (x) v (u in F, v in S); Side::left uses v (x) u, which is the window
/// relevant for left multiplication. The coboundary is obtained by Frobenius
/// reciprocity, without touching the complement of F.
BoundaryDecomposition boundary_decomposition(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S,
                                             Side side = Side::right);

IrrepSet interior(const FusionRing& ring, const IrrepSet& F, const IrrepSet& S, Side side = Side::right);

/// Union of supports of all <= radius fold products of S, its conjugates and the unit.
IrrepSet ball(const FusionRing& ring, const IrrepSet& S, std::int64_t radius);

/// Balls of radius 0..max_radius, built incrementally.
std::vector<IrrepSet> balls(const FusionRing& ring, const IrrepSet& S, std::int64_t max_radius);

struct AxiomReport {
    std::size_t labels_checked = 0;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Unit law, conjugation involution, n_conj(u) = n_u, dimension multiplicativity
/// and Frobenius reciprocity N_{uv}^w = N_{w conj(v)}^u = N_{conj(u) w}^v over all pairs in `labels`.
AxiomReport check_fusion_axioms(const FusionRing& ring, const IrrepSet& labels);

/// Labels to check by default: su2 up to 12, heisenberg ball of radius 3,
/// other infinite groups standard window 3, everything for finite rings.
IrrepSet default_axiom_labels(const FusionRing& ring);

} // namespace folnerlab
