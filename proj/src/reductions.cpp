#include "oal/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "oal/predicates.hpp"

namespace oal {

namespace {

std::string tag_args(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// binomial with saturation so budget checks cannot overflow
long long binom_capped(int a, int b, long long cap) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long out = 1;
    for (int i = 1; i <= b; ++i) {
        out = out * (a - b + i) / i;
        if (out > cap) return cap + 1;
    }
    return out;
}

void check_budget(long long nprime, int budget, const char* what) {
    if (nprime > budget)
        throw std::invalid_argument(std::string(what) + ": gadget would have " + std::to_string(nprime) +
                                    " vertices, over the budget of " + std::to_string(budget));
}

std::vector<int> chain_counts(const Graph& g, int r) {
    std::vector<int> cnt(g.order());
    for (int v = 0; v < g.order(); ++v) cnt[v] = g.degree(v) + r - 1;
    return cnt;
}

}  // namespace

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::original:
            return "original(" + std::to_string(v) + ")";
        case Kind::layer:
            return "layer" + tag_args(v, index);
        case Kind::clique:
            return "clique(" + std::to_string(index) + ")";
        case Kind::avertex:
            return "avertex" + tag_args(v, index);
        case Kind::bvertex: {
            std::string s = "bvertex(" + std::to_string(v) + ",{";
            for (size_t i = 0; i < subset.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(subset[i]);
            }
            return s + "})";
        }
    }
    return "?";
}

ReductionArtifact oa_downshift_gadget(const Graph& g, int r, int budget) {
    const int n = g.order();
    const int csize = n - r + 2;
    if (n < 1 || csize < 1)
        throw std::invalid_argument("oa_downshift_gadget: clique size n-r+2 must be positive");
    check_budget(3LL * n + csize, budget, "oa_downshift_gadget");

    // layer i copy of vertex u sits at (i-1)*n+u, clique vertex c_j at 3n+j-1
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, v);
        e.emplace_back(n + u, n + v);
    }
    for (int u = 0; u < n; ++u) {
        e.emplace_back(u, 2 * n + u);
        e.emplace_back(n + u, 2 * n + u);
        for (int j = 0; j < csize; ++j) e.emplace_back(2 * n + u, 3 * n + j);
    }
    for (int i = 0; i < csize; ++i)
        for (int j = i + 1; j < csize; ++j) e.emplace_back(3 * n + i, 3 * n + j);

    std::vector<Provenance> labels;
    for (int layer = 1; layer <= 3; ++layer)
        for (int u = 0; u < n; ++u) labels.push_back({Provenance::Kind::layer, u, layer, {}});
    for (int j = 1; j <= csize; ++j) labels.push_back({Provenance::Kind::clique, -1, j, {}});

    return ReductionArtifact{GadgetKind::downshift, g, Graph::from_edge_list(3 * n + csize, e),
                             r, std::move(labels), {2, 0}, true};
}

ReductionArtifact goa_gadget_low(const Graph& g, int r, int budget) {
    const int n = g.order();
    if (r > 1) throw std::invalid_argument("goa_gadget_low: requires r <= 1");
    if (g.min_degree() < std::abs(r) + 1)
        throw std::invalid_argument("goa_gadget_low: requires minimum degree >= |r|+1");

    const std::vector<int> cnt = chain_counts(g, r);
    long long total = 0;
    for (int c : cnt) total += c;
    check_budget(n + 2 * total, budget, "goa_gadget_low");

    std::vector<std::pair<int, int>> e = g.edges();
    const int a0 = n;
    const int b0 = n + static_cast<int>(total);
    for (int v = 0, at = 0; v < n; ++v) {
        for (int i = 0; i < cnt[v]; ++i, ++at) {
            e.emplace_back(v, a0 + at);
            e.emplace_back(a0 + at, b0 + at);
        }
    }

    std::vector<Provenance> labels;
    for (int v = 0; v < n; ++v) labels.push_back({Provenance::Kind::original, v, 0, {}});
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= cnt[v]; ++i) labels.push_back({Provenance::Kind::avertex, v, i, {}});
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= cnt[v]; ++i) labels.push_back({Provenance::Kind::bvertex, v, 0, {i}});

    return ReductionArtifact{GadgetKind::goa_low, g,
                             Graph::from_edge_list(n + 2 * static_cast<int>(total), e), r,
                             std::move(labels), {1, (r - 1) * n + 2 * g.edge_count()}, true};
}

ReductionArtifact goa_gadget_high(const Graph& g, int r, int budget) {
    const int n = g.order();
    if (r < 2) throw std::invalid_argument("goa_gadget_high: requires r >= 2");
    if (g.min_degree() < 1) throw std::invalid_argument("goa_gadget_high: requires minimum degree >= 1");

    const std::vector<int> cnt = chain_counts(g, r);
    long long na = 0, nb = 0;
    for (int c : cnt) {
        na += c;
        nb += binom_capped(c, r, budget);
    }
    check_budget(n + na + nb, budget, "goa_gadget_high");

    std::vector<std::pair<int, int>> e = g.edges();
    std::vector<int> astart(n);
    for (int v = 0, at = 0; v < n; ++v) {
        astart[v] = n + at;
        for (int i = 0; i < cnt[v]; ++i, ++at) e.emplace_back(v, n + at);
    }
    std::vector<Provenance> labels;
    for (int v = 0; v < n; ++v) labels.push_back({Provenance::Kind::original, v, 0, {}});
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= cnt[v]; ++i) labels.push_back({Provenance::Kind::avertex, v, i, {}});

    // B-vertices: one per r-subset of A(v), enumerated lexicographically
    int bat = n + static_cast<int>(na);
    for (int v = 0; v < n; ++v) {
        std::vector<int> pick(r);
        for (int i = 0; i < r; ++i) pick[i] = i;
        while (true) {
            for (int i : pick) e.emplace_back(astart[v] + i, bat);
            std::vector<int> tag(pick.begin(), pick.end());
            for (int& x : tag) ++x;
            labels.push_back({Provenance::Kind::bvertex, v, 0, tag});
            ++bat;
            int i = r - 1;
            while (i >= 0 && pick[i] == cnt[v] - r + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return ReductionArtifact{GadgetKind::goa_high, g, Graph::from_edge_list(bat, e), r,
                             std::move(labels), {1, (r - 1) * n + 2 * g.edge_count()}, true};
}

bool verify_regular_vc_equivalence(const Graph& g, int r, const SolveOptions& opt) {
    const int n = g.order();
    if (!g.is_connected()) throw std::invalid_argument("verify_regular_vc_equivalence: graph is not connected");
    if (!g.is_regular()) throw std::invalid_argument("verify_regular_vc_equivalence: graph is not regular");
    const int d = g.min_degree();
    if (r >= 3) {
        if (d != r) throw std::invalid_argument("verify_regular_vc_equivalence: graph is not r-regular");
    } else if (r == 2) {
        if (d != 3) throw std::invalid_argument("verify_regular_vc_equivalence: r=2 requires a cubic graph");
    } else {
        throw std::invalid_argument("verify_regular_vc_equivalence: requires r >= 3, or r = 2 on cubic graphs");
    }
    if (n > 25) throw std::invalid_argument("verify_regular_vc_equivalence: subset enumeration capped at n = 25");

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s = VertexSet::of(n, {});
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.add(v);
        if (is_vertex_cover(g, s) != is_offensive_r_alliance(g, s, r).holds) return false;
    }
    return min_vertex_cover(g, opt).optimum == min_offensive_alliance(g, r, opt).optimum;
}

VertexSet map_certificate(const ReductionArtifact& art, const VertexSet& src) {
    const Graph& g = art.source;
    const int n = g.order();
    if (src.universe() != n) throw std::invalid_argument("map_certificate: universe mismatch");

    VertexSet out = VertexSet::of(art.gprime.order(), {});
    if (art.kind == GadgetKind::downshift) {
        if (src.size() == 0 || !is_offensive_r_alliance(g, src, art.r).holds)
            throw std::invalid_argument("map_certificate: source set is not an offensive r-alliance");
        for (int v = src.next(0); v < n; v = src.next(v + 1)) {
            out.add(v);
            out.add(n + v);
        }
        if (!is_offensive_r_alliance(art.gprime, out, art.r - 1).holds)
            throw std::logic_error("map_certificate: S x {1,2} fails the (r-1)-offensive predicate on the gadget");
        return out;
    }

    if (!is_dominating(g, src)) throw std::invalid_argument("map_certificate: source set is not dominating");
    for (int v = src.next(0); v < n; v = src.next(v + 1)) out.add(v);
    for (int w = 0; w < art.gprime.order(); ++w)
        if (art.labels[w].kind == Provenance::Kind::avertex) out.add(w);
    if (!is_global_offensive_r_alliance(art.gprime, out, art.r).holds)
        throw std::logic_error("map_certificate: D u A fails the global offensive predicate on the gadget");
    return out;
}

}  // namespace oal
