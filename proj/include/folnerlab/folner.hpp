#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "folnerlab/fusion.hpp"

namespace folnerlab {

struct ProfileRow {
    std::int64_t radius = 0;
    std::int64_t weight = 0;              ///< |F|
    std::int64_t boundary = 0;            ///< |d_S F|
    std::int64_t symmetric_boundary = 0;  ///< |d_S F| + |d_S F^c|
    mpq_class ratio;                      ///< symmetric_boundary / weight
};

struct FolnerCertificate {
    IrrepSet S;
    mpq_class epsilon;
    IrrepSet F;
    std::int64_t boundary_weight = 0;
    std::int64_t window_weight = 0;
    std::string strategy;
    std::int64_t radius = 0; ///< ball radius, or index into the user sequence
};

struct ExhaustionReport {
    IrrepSet S;
    mpq_class epsilon;
    std::int64_t max_radius = 0;
    std::string strategy;
    std::vector<ProfileRow> profile;
};

using FolnerResult = std::variant<FolnerCertificate, ExhaustionReport>;

/// Scans conjugation closures of ball(S, k), k = 0..max_radius, for the first
/// window with |d_S^sym F| < epsilon |F|.
FolnerResult folner_search(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon,
                           std::int64_t max_radius);

/// Same test over a user-supplied window sequence (each window is conjugation closed first).
FolnerResult folner_search_windows(const FusionRing& ring, const IrrepSet& S, const mpq_class& epsilon,
                                   const std::vector<IrrepSet>& windows);

std::vector<ProfileRow> isoperimetric_profile(const FusionRing& ring, const IrrepSet& S, std::int64_t max_radius);

/// Recomputes both sides of the certificate by brute force, without the
/// Frobenius shortcut used by the search.
bool verify_folner_certificate(const FusionRing& ring, const FolnerCertificate& cert);

/// Least squares slope of -log(ratio) against log(radius) over rows with
/// radius in [rmin, rmax] and nonzero ratio.
double fit_decay_exponent(const std::vector<ProfileRow>& rows, std::int64_t rmin, std::int64_t rmax);

/// radius,weight,boundary,symmetric_boundary,ratio,ratio_decimal
std::string profile_csv(const std::vector<ProfileRow>& rows);

} // namespace folnerlab
