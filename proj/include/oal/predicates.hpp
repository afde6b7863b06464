#pragma once

#include <map>
#include <vector>

#include "oal/graph.hpp"
#include "oal/vertex_set.hpp"

namespace oal {

/// Inclusive range of admissible alliance parameters.
struct RRange {
    int lo = 0;
    int hi = -1;
    bool contains(int r) const { return r >= lo && r <= hi; }
    bool empty() const { return lo > hi; }
};

/// Admissible parameter interval [2 - max_degree, max_degree]. Degenerate
/// (empty) on edgeless graphs.
RRange valid_r_range(const Graph& g);

/// Per-vertex certificate for the offensive condition. For every boundary
/// vertex v the margin is delta_S(v) - delta_Sbar(v) - r; the condition
/// holds iff all margins are >= 0.
struct AllianceReport {
    bool holds = false;
    int r = 0;
    bool global_checked = false;           // true when produced by the global predicate
    bool is_global = false;                // boundary(S) == complement(S)
    std::map<int, int> margins;            // v in boundary(S) -> margin
    std::vector<int> failing;              // violating vertices (margin < 0, or undominated in global mode)
};

/// Offensive r-alliance test: delta_S(v) >= delta_Sbar(v) + r for every
/// v in boundary(S). S must be nonempty and r within valid_r_range.
AllianceReport is_offensive_r_alliance(const Graph& g, const VertexSet& S, int r);

/// Global variant: additionally requires S to dominate (boundary(S) == S-bar).
AllianceReport is_global_offensive_r_alliance(const Graph& g, const VertexSet& S, int r);

bool is_dominating(const Graph& g, const VertexSet& S);
bool is_k_dominating(const Graph& g, const VertexSet& S, int k);
bool is_vertex_cover(const Graph& g, const VertexSet& S);
bool is_independent(const Graph& g, const VertexSet& S);

}  // namespace oal
