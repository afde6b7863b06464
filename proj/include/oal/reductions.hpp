#pragma once

#include <string>
#include <vector>

#include "oal/graph.hpp"
#include "oal/solvers.hpp"
#include "oal/vertex_set.hpp"

namespace oal {

enum class GadgetKind { downshift, goa_low, goa_high };

/// Where a gadget vertex came from. Tags serialize as original(v),
/// layer(v,i), clique(j), avertex(v,i), bvertex(v,{i,...}); positions are
/// 1-based to match the construction prose.
struct Provenance {
    enum class Kind { original, layer, clique, avertex, bvertex };
    Kind kind = Kind::original;
    int v = -1;               // source vertex, or -1 for clique tags
    int index = 0;            // layer number, attachment position, or clique index j
    std::vector<int> subset;  // bvertex only: positions within A(v), ascending

    std::string to_string() const;
};

/// Affine certificate-size correspondence k -> scale*k + offset.
struct SizeMap {
    int scale = 1;
    int offset = 0;
    int operator()(int k) const { return scale * k + offset; }
};

/// A gadget graph, its provenance labeling (one tag per gprime vertex,
/// bijective), and the size correspondence. `r` is the source-problem
/// parameter; the downshift target parameter is r-1.
struct ReductionArtifact {
    GadgetKind kind = GadgetKind::downshift;
    Graph source;
    Graph gprime;
    int r = 0;
    std::vector<Provenance> labels;
    SizeMap size_map;
    bool preconditions_met = false;
};

/// r-OA -> (r-1)-OA gadget: three layers of V (layers 1 and 2 copy G, layer 3
/// is a per-vertex connector) plus a clique of size n-r+2 joined to layer 3.
/// size_map is k -> 2k. Requires n >= max(1, r-1) and |V'| <= budget.
ReductionArtifact oa_downshift_gadget(const Graph& g, int r, int budget = 64);

/// Dominating Set -> r-GOA gadget for r <= 1: each v gets delta(v)+r-1
/// pendant paths v-a-b. Requires min degree >= |r|+1; size_map k -> k+(r-1)n+2m.
ReductionArtifact goa_gadget_low(const Graph& g, int r, int budget = 64);

/// Dominating Set -> r-GOA gadget for r >= 2: A(v) holds delta(v)+r-1
/// independent attachment vertices, B(v) one vertex per r-element subset of
/// A(v), adjacent to exactly that subset. Requires min degree >= 1;
/// size_map k -> k+(r-1)n+2m. Subset counts make this blow up quickly,
/// hence the budget guard.
ReductionArtifact goa_gadget_high(const Graph& g, int r, int budget = 64);

/// On a connected regular graph, checks both the subset-level equivalence
/// (S is a vertex cover iff S is an offensive r-alliance, all 2^n-1 nonempty
/// subsets) and the optimum-level equality min VC = min r-OA. Accepts
/// r-regular graphs with r >= 3, or cubic graphs with r = 2.
bool verify_regular_vc_equivalence(const Graph& g, int r, const SolveOptions& opt = {});

/// Forward certificate map: downshift sends an r-OA S of the source to
/// S x {1,2}; the GOA gadgets send a dominating set D to D u A. The source
/// set is validated against the source predicate. The mapped set is checked
/// against the target predicate and a std::logic_error names the failure if
/// it does not certify.
VertexSet map_certificate(const ReductionArtifact& art, const VertexSet& src);

}  // namespace oal
