#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "folnerlab/folner.hpp"
#include "folnerlab/polalg.hpp"
#include "folnerlab/reldim.hpp"
#include "folnerlab/solvers.hpp"
#include "folnerlab/tower.hpp"

namespace folnerlab {

using Json = nlohmann::ordered_json;

/// One shared algebra per tag for the life of the process.
AlgebraPtr shared_algebra(std::string_view tag);

Json label_json(const FusionRing& ring, const IrrepLabel& u);
Json set_json(const FusionRing& ring, const IrrepSet& E);
IrrepSet set_from_json(const FusionRing& ring, const Json& j);
Json rational_json(const mpq_class& q);

/// {"re", "im"}: "p/q" strings in exact mode, numbers in floating mode.
Json scalar_json(const Scalar& c);

/// {"algebra", "mode", "terms": [{"irrep", "row", "col", "re", "im"}]}, terms in basis order.
Json element_to_json(const AlgebraElement& a);
/// Validates keys, modes and indices; messages name the offending field.
AlgebraElement element_from_json(const Json& j, std::string_view where = "element");

/// {"n", "entries": [[element, ...], ...]}. A bare element is read as a 1x1 matrix.
Json matrix_to_json(const MatrixOverPol& T);
MatrixOverPol matrix_from_json(const Json& j);

/// Reads a JSON file; parse errors carry line and column.
Json read_json_file(const std::string& path);
std::string dump(const Json& j);

Json to_json(const DimensionEstimate& e, const FusionRing& ring);
Json to_json(const ProfileRow& r);
Json to_json(const FolnerResult& r, const FusionRing& ring);
Json to_json(const std::vector<ProfileRow>& rows, const IrrepSet& S, const FusionRing& ring);
Json to_json(const ZeroDivisorResult& r);
Json to_json(const ZeroDivisorCertificate& c);
Json to_json(const OreResult& r);
Json to_json(const TowerReport& r, const FusionRing& ring, const HaarReport* haar = nullptr);
Json to_json(const HaarReport& r, const FusionRing& ring);
Json to_json(const AxiomReport& r, const FusionRing& ring);

} // namespace folnerlab
