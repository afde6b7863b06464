#include "oal/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "oal/solvers.hpp"

namespace oal {

namespace {

WitnessCertificate certify(const Graph& g, VertexSet w, int claimed, int r, std::string name) {
    WitnessCertificate cert;
    cert.report = is_global_offensive_r_alliance(g, w, r);
    cert.witness = std::move(w);
    cert.claimed_bound = claimed;
    cert.construction = std::move(name);
    if (!cert.report.holds)
        throw std::logic_error(cert.construction + " construction produced an invalid witness");
    if (static_cast<int>(cert.witness.size()) > claimed)
        throw std::logic_error(cert.construction + " witness exceeds its claimed bound");
    return cert;
}

}  // namespace

WitnessCertificate thm31_witness(const Graph& g, int r) {
    const int n = g.order();
    const int delta = g.min_degree();
    if (r < 2 - delta || r > delta)
        throw std::invalid_argument("thm31_witness: r=" + std::to_string(r) + " outside {2-delta,...,delta}");

    int v = 0;
    while (g.degree(v) != delta) ++v;

    const int y_size = ceil_half(delta + r);
    VertexSet s = VertexSet::of(n, {v});
    int taken = 0;
    for (int u : g.neighbors(v)) {
        if (taken < y_size)
            ++taken;  // u goes to Y, stays outside S
        else
            s.add(u);
    }

    VertexSet w = s.complement();
    // the proof's acceptance condition, checked vertex by vertex over S
    for (int u = s.next(0); u < n; u = s.next(u + 1)) {
        if (g.degree_in(u, w) < g.degree_in(u, s) + r)
            throw std::logic_error("thm31_witness: offensive condition fails inside S");
    }
    const int claimed = n - floor_half(delta - r + 2);
    if (static_cast<int>(w.size()) != claimed)
        throw std::logic_error("thm31_witness: size mismatch against n - floor((delta-r+2)/2)");
    return certify(g, std::move(w), claimed, r, "thm31");
}

WitnessCertificate thm32_witness(const Graph& g, int r, const VertexSet& h) {
    const int n = g.order();
    if (r < 1) throw std::invalid_argument("thm32_witness: r >= 1 required");
    if (!is_k_dominating(g, h, r))
        throw std::invalid_argument("thm32_witness: H is not an r-dominating set");

    const int claimed = (static_cast<int>(h.size()) + n) / 2;
    const std::vector<int> rest = h.complement().to_vector();

    if (rest.empty())
        return certify(g, VertexSet::full(n), claimed, r, "thm32");
    if (rest.size() == 1) {
        if (is_global_offensive_r_alliance(g, h, r).holds)
            return certify(g, h, claimed, r, "thm32");
        return certify(g, VertexSet::full(n), claimed, r, "thm32");
    }

    // swap local search for a cut of the induced subgraph on rest
    std::vector<int> side(n, -1);
    for (size_t i = 0; i < rest.size(); ++i) side[rest[i]] = static_cast<int>(i % 2);
    auto split_degrees = [&](int v) {
        int same = 0, opp = 0;
        for (int u : g.neighbors(v)) {
            if (side[u] == -1) continue;
            (side[u] == side[v] ? same : opp) += 1;
        }
        return std::pair<int, int>(same, opp);
    };
    for (bool moved = true; moved;) {
        moved = false;
        for (int v : rest) {
            auto [same, opp] = split_degrees(v);
            if (same > opp) {
                side[v] = 1 - side[v];
                moved = true;
            }
        }
    }
    for (int v : rest) {
        auto [same, opp] = split_degrees(v);
        if (same > opp) throw std::logic_error("thm32_witness: cut is not a local maximum");
    }

    int size0 = 0;
    for (int v : rest) size0 += (side[v] == 0);
    const int size1 = static_cast<int>(rest.size()) - size0;
    int pick = side[rest.front()];
    if (size0 != size1) pick = size0 < size1 ? 0 : 1;

    VertexSet w = h;
    for (int v : rest)
        if (side[v] == pick) w.add(v);
    return certify(g, std::move(w), claimed, r, "thm32");
}

WitnessCertificate independent_complement_witness(const Graph& g, int r) {
    const int n = g.order();
    const int delta = g.min_degree();
    if (r > delta)
        throw std::invalid_argument("independent_complement_witness: r > delta");
    if (g.edge_count() == 0)
        throw std::invalid_argument("independent_complement_witness: graph has no edges");

    VertexSet is = VertexSet::of(n, {});
    for (int v = 0; v < n; ++v)
        if (!g.neighbor_set(v).intersects(is)) is.add(v);

    VertexSet w = is.complement();
    const int claimed = static_cast<int>(w.size());
    return certify(g, std::move(w), claimed, r, "independent_complement");
}

}  // namespace oal
