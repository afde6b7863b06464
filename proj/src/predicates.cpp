#include "oal/predicates.hpp"

#include <stdexcept>

namespace oal {

RRange valid_r_range(const Graph& g) {
    const int d1 = g.max_degree();
    return RRange{2 - d1, d1};
}

namespace {

void require_valid_args(const Graph& g, const VertexSet& S, int r) {
    if (S.universe() != g.order()) throw std::invalid_argument("alliance check: set universe mismatch");
    if (S.empty()) throw std::invalid_argument("alliance check: S must be nonempty");
    const RRange range = valid_r_range(g);
    if (!range.contains(r))
        throw std::invalid_argument("alliance check: r=" + std::to_string(r) + " outside valid range [" +
                                    std::to_string(range.lo) + "," + std::to_string(range.hi) + "]");
}

AllianceReport evaluate(const Graph& g, const VertexSet& S, int r, bool global_mode) {
    require_valid_args(g, S, r);
    AllianceReport rep;
    rep.r = r;
    rep.global_checked = global_mode;

    const VertexSet sbar = S.complement();
    const VertexSet bd = g.boundary(S);
    rep.is_global = (bd == sbar);

    bool offensive = true;
    for (int v = bd.next(0); v < g.order(); v = bd.next(v + 1)) {
        const int in_s = g.degree_in(v, S);
        const int in_sbar = g.degree_in(v, sbar);
        const int margin = in_s - in_sbar - r;
        // same condition written on the full degree; disagreement means a
        // broken adjacency invariant
        if (g.degree(v) - 2 * in_sbar - r != margin)
            throw std::logic_error("alliance check: degree partition identity violated at vertex " + std::to_string(v));
        rep.margins[v] = margin;
        if (margin < 0) {
            offensive = false;
            rep.failing.push_back(v);
        }
    }

    if (global_mode) {
        if (!rep.is_global) {
            // undominated vertices: outside S but not in the boundary
            const VertexSet undom = sbar - bd;
            for (int v = undom.next(0); v < g.order(); v = undom.next(v + 1))
                rep.failing.push_back(v);
        }
        rep.holds = offensive && rep.is_global;
    } else {
        rep.holds = offensive;
    }
    return rep;
}

}  // namespace

AllianceReport is_offensive_r_alliance(const Graph& g, const VertexSet& S, int r) {
    return evaluate(g, S, r, false);
}

AllianceReport is_global_offensive_r_alliance(const Graph& g, const VertexSet& S, int r) {
    return evaluate(g, S, r, true);
}

bool is_dominating(const Graph& g, const VertexSet& S) {
    return is_k_dominating(g, S, 1);
}

bool is_k_dominating(const Graph& g, const VertexSet& S, int k) {
    if (S.universe() != g.order()) throw std::invalid_argument("is_k_dominating: set universe mismatch");
    const VertexSet sbar = S.complement();
    for (int v = sbar.next(0); v < g.order(); v = sbar.next(v + 1))
        if (g.degree_in(v, S) < k) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& S) {
    if (S.universe() != g.order()) throw std::invalid_argument("is_vertex_cover: set universe mismatch");
    for (auto [u, v] : g.edges())
        if (!S.contains(u) && !S.contains(v)) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& S) {
    if (S.universe() != g.order()) throw std::invalid_argument("is_independent: set universe mismatch");
    for (int v = S.next(0); v < g.order(); v = S.next(v + 1))
        if (g.degree_in(v, S) > 0) return false;
    return true;
}

}  // namespace oal
