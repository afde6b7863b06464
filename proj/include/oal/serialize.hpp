#pragma once

#include <string>

#include "json.hpp"
#include "oal/bounds.hpp"
#include "oal/predicates.hpp"
#include "oal/reductions.hpp"
#include "oal/solvers.hpp"
#include "oal/spectral.hpp"
#include "oal/witness.hpp"

namespace oal {

using ojson = nlohmann::ordered_json;

ojson json_of(const VertexSet& s);
ojson json_of(const AllianceReport& rep);
ojson json_of(const SolveResult& res, bool with_timing = true);
ojson json_of(const SpectralReport& rep);
ojson json_of(const BoundsReport& rep);
ojson json_of(const WitnessCertificate& cert);
ojson json_of(const ReductionArtifact& art);

/// Aligned text view of a report. Objects render as "key: value" lines; a
/// top-level array-of-objects field ("entries", "rows", ...) renders as an
/// aligned table. Tables are always derived from the JSON, never rebuilt
/// from the domain types.
std::string render_table(const ojson& j);

}  // namespace oal
