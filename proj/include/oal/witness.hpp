#pragma once

#include <string>

#include "oal/graph.hpp"
#include "oal/predicates.hpp"
#include "oal/vertex_set.hpp"

namespace oal {

/// A constructed global offensive r-alliance together with the bound it
/// certifies. Constructions throw std::logic_error instead of returning an
/// unverified set, so report.holds is true on every instance that exists.
struct WitnessCertificate {
    VertexSet witness;
    int claimed_bound = 0;  // |witness| <= claimed_bound
    AllianceReport report;
    std::string construction;  // thm31 | thm32 | independent_complement
};

/// Complement of S = {v} u N(v) - Y for a minimum-degree vertex v, where Y
/// holds ceil((delta+r)/2) neighbors of v. Size exactly n - floor((delta-r+2)/2).
/// Deterministic: v is the smallest-index minimum-degree vertex and Y the
/// lexicographically smallest subset of N(v). Requires r in {2-delta,...,delta}.
WitnessCertificate thm31_witness(const Graph& g, int r);

/// H u X where H is an r-dominating set (checked, r >= 1) and X the smaller
/// side of a swap-local-maximum cut of the subgraph induced by the complement
/// of H. Size at most floor((|H| + n)/2).
WitnessCertificate thm32_witness(const Graph& g, int r, const VertexSet& h);

/// Complement of a greedily built (ascending index) maximal independent set.
/// Requires r <= delta and at least one edge.
WitnessCertificate independent_complement_witness(const Graph& g, int r);

}  // namespace oal
