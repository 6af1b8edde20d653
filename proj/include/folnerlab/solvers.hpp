#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folnerlab/polalg.hpp"
#include "folnerlab/reldim.hpp"

namespace folnerlab {

/// side = left: a b = 0; side = right: b a = 0.
struct ZeroDivisorCertificate {
    AlgebraElement a;
    AlgebraElement b;
    Side side = Side::left;
    IrrepSet window;
    std::int64_t radius = 0;
    bool verified = false; ///< product recomputed by a full multiply
};

struct KernelDimPoint {
    std::int64_t radius = 0; ///< ball radius, or index into an explicit window list
    DimensionEstimate estimate;
};

struct NotFoundReport {
    AlgebraElement a;
    Side side = Side::left;
    std::int64_t max_radius = 0;
    std::vector<KernelDimPoint> sequence;
};

using ZeroDivisorResult = std::variant<ZeroDivisorCertificate, NotFoundReport>;

/// Kernel of multiplication by a restricted to the interiors of growing
/// conjugation-closed balls of supp(a), radius 1..max_radius.
ZeroDivisorResult zero_divisor_search(const AlgebraElement& a, Side side, std::int64_t max_radius);

/// Re-multiplies a and b in full.
bool verify_zero_divisor(const ZeroDivisorCertificate& cert, double tol = 1e-9);

/// Estimates on conjugation-closed balls of supp(a) at the given radii.
std::vector<KernelDimPoint> kernel_dim_sequence(const AlgebraElement& a, Side side,
                                                const std::vector<std::int64_t>& radii);
/// Estimates on explicit windows; point i carries radius i.
std::vector<KernelDimPoint> kernel_dim_sequence(const AlgebraElement& a, Side side,
                                                const std::vector<IrrepSet>& windows);

/// a t = s b with t != 0.
struct OrePair {
    AlgebraElement a;
    AlgebraElement s;
    AlgebraElement t;
    AlgebraElement b;
    IrrepSet window;
    std::int64_t radius = 0;
    std::int64_t window_weight = 0;
    std::int64_t boundary_weight = 0; ///< left boundary relative to supp(a) and supp(s)
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool verified = false;
};

struct OreExhaustion {
    AlgebraElement a;
    AlgebraElement s;
    std::int64_t max_radius = 0;
    /// (radius, |F|, |boundary|) for every radius tried
    std::vector<std::array<std::int64_t, 3>> tried;
};

using OreResult = std::variant<OrePair, ZeroDivisorCertificate, OreExhaustion>;

/// Finds a ball window F with 2 |d_S F| < |F| (radius doubling, then the
/// smallest radius below the first hit), and reads (t, b) off a kernel vector
/// of (x, y) -> a x - s y on W_int + W_int -> W_F. If t = 0 the result is a
/// zero-divisor certificate for s, unless prefer_ore finds another basis
/// vector with t != 0.
OreResult ore_pair(const AlgebraElement& a, const AlgebraElement& s, std::int64_t max_radius, bool prefer_ore = false);

bool verify_ore_pair(const OrePair& pair, double tol = 1e-9);

} // namespace folnerlab
