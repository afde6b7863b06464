#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "oal/families.hpp"
#include "oal/predicates.hpp"
#include "oracle.hpp"

using oal::Graph;
using oal::VertexSet;

namespace {

VertexSet from_mask(std::uint32_t mask, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("valid_r_range") {
    const auto kr = oal::valid_r_range(oal::complete_graph(5));
    CHECK(kr.lo == -2);
    CHECK(kr.hi == 4);
    CHECK(kr.contains(4));
    CHECK(!kr.contains(5));

    const auto star = oal::valid_r_range(oal::complete_bipartite(1, 3));
    CHECK(star.lo == -1);
    CHECK(star.hi == 3);

    const auto edgeless = oal::valid_r_range(Graph::from_edge_list(4, {}));
    CHECK(edgeless.empty());
}

TEST_CASE("Alliance predicates agree with the oracle on every subset") {
    for (const Graph& g : {oal::complete_graph(4), oal::cycle_graph(5), oal::path_graph(4),
                           oal::complete_bipartite(2, 3), oal::petersen_graph()}) {
        const oracle::Adj adj = oracle::adj_of(g);
        const auto range = oal::valid_r_range(g);
        const int n = g.order();
        for (int r = range.lo; r <= range.hi; ++r)
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                const VertexSet s = from_mask(mask, n);
                CHECK(oal::is_offensive_r_alliance(g, s, r).holds == oracle::offensive(adj, mask, r, false));
                CHECK(oal::is_global_offensive_r_alliance(g, s, r).holds == oracle::offensive(adj, mask, r, true));
            }
    }
}

TEST_CASE("Alliance report fields") {
    const Graph c4 = oal::cycle_graph(4);

    auto rep = oal::is_global_offensive_r_alliance(c4, VertexSet::of(4, {0, 2}), 1);
    CHECK(rep.holds);
    CHECK(rep.r == 1);
    CHECK(rep.global_checked);
    CHECK(rep.is_global);
    CHECK(rep.failing.empty());
    // each outside vertex sees both members and nothing else: margin 2-0-1
    CHECK(rep.margins.at(1) == 1);
    CHECK(rep.margins.at(3) == 1);

    rep = oal::is_offensive_r_alliance(c4, VertexSet::of(4, {0}), 1);
    CHECK(!rep.holds);
    CHECK(!rep.global_checked);
    CHECK(rep.margins.at(1) == -1);  // 1 inside, 1 outside, r=1
    CHECK(rep.failing == std::vector<int>{1, 3});

    // non-dominating set: the global check lists the unreached vertex
    const Graph p4 = oal::path_graph(4);
    rep = oal::is_global_offensive_r_alliance(p4, VertexSet::of(4, {0}), 0);
    CHECK(!rep.holds);
    CHECK(!rep.is_global);
    CHECK(std::find(rep.failing.begin(), rep.failing.end(), 2) != rep.failing.end());
    CHECK(std::find(rep.failing.begin(), rep.failing.end(), 3) != rep.failing.end());
}

TEST_CASE("S = V is vacuously global offensive") {
    const Graph g = oal::cycle_graph(5);
    const auto rep = oal::is_global_offensive_r_alliance(g, VertexSet::full(5), 2);
    CHECK(rep.holds);
    CHECK(rep.is_global);
    CHECK(rep.margins.empty());
}

TEST_CASE("Alliance predicate argument checking") {
    const Graph c4 = oal::cycle_graph(4);
    CHECK_THROWS_AS(oal::is_offensive_r_alliance(c4, VertexSet(4), 1), std::invalid_argument);       // empty S
    CHECK_THROWS_AS(oal::is_offensive_r_alliance(c4, VertexSet::of(5, {0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(oal::is_offensive_r_alliance(c4, VertexSet::of(4, {0}), 3), std::invalid_argument);  // r > delta1
    CHECK_THROWS_AS(oal::is_offensive_r_alliance(c4, VertexSet::of(4, {0}), -1), std::invalid_argument); // r < 2-delta1
}

TEST_CASE("Monotonicity in r at the subset level") {
    // an (r+1)-offensive alliance is an r-offensive alliance
    for (const Graph& g : {oal::cycle_graph(6), oal::complete_graph(5), oal::complete_bipartite(2, 3)}) {
        const int n = g.order();
        const auto range = oal::valid_r_range(g);
        for (int r = range.lo; r < range.hi; ++r)
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                const VertexSet s = from_mask(mask, n);
                if (oal::is_offensive_r_alliance(g, s, r + 1).holds)
                    CHECK(oal::is_offensive_r_alliance(g, s, r).holds);
                if (oal::is_global_offensive_r_alliance(g, s, r + 1).holds)
                    CHECK(oal::is_global_offensive_r_alliance(g, s, r).holds);
            }
    }
}

TEST_CASE("Parity collapse at the subset level") {
    // all degrees even: the (2l-1)- and (2l)-offensive predicates coincide
    for (const Graph& g : {oal::cycle_graph(5), oal::cycle_graph(6), oal::hypercube_graph(2)}) {
        const int n = g.order();
        const auto range = oal::valid_r_range(g);
        for (int l = (range.lo + 1) / 2; 2 * l <= range.hi; ++l) {
            if (2 * l - 1 < range.lo) continue;
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                const VertexSet s = from_mask(mask, n);
                CHECK(oal::is_offensive_r_alliance(g, s, 2 * l - 1).holds ==
                      oal::is_offensive_r_alliance(g, s, 2 * l).holds);
            }
        }
    }
    // all degrees odd: the (2l)- and (2l+1)-offensive predicates coincide
    for (const Graph& g : {oal::complete_graph(4), oal::prism_graph()}) {
        const int n = g.order();
        const auto range = oal::valid_r_range(g);
        for (int l = range.lo / 2; 2 * l + 1 <= range.hi; ++l) {
            if (2 * l < range.lo) continue;
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                const VertexSet s = from_mask(mask, n);
                CHECK(oal::is_offensive_r_alliance(g, s, 2 * l).holds ==
                      oal::is_offensive_r_alliance(g, s, 2 * l + 1).holds);
            }
        }
    }
}

TEST_CASE("Vertex cover equals 2-offensive alliance on cubic graphs, subset level") {
    for (const Graph& g : {oal::complete_graph(4), oal::complete_bipartite(3, 3), oal::prism_graph(),
                           oal::petersen_graph()}) {
        const int n = g.order();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const VertexSet s = from_mask(mask, n);
            CHECK(oal::is_vertex_cover(g, s) == oal::is_offensive_r_alliance(g, s, 2).holds);
        }
    }
}

TEST_CASE("Set predicates agree with the oracle") {
    for (const Graph& g : {oal::cycle_graph(6), oal::complete_bipartite(2, 3), oal::path_graph(5),
                           oal::complete_graph(4)}) {
        const oracle::Adj adj = oracle::adj_of(g);
        const int n = g.order();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const VertexSet s = from_mask(mask, n);
            CHECK(oal::is_dominating(g, s) == oracle::dominating(adj, mask));
            CHECK(oal::is_vertex_cover(g, s) == oracle::vertex_cover(adj, mask));
            CHECK(oal::is_independent(g, s) == oracle::independent(adj, mask));
            for (int k = 1; k <= 3; ++k)
                CHECK(oal::is_k_dominating(g, s, k) == oracle::k_dominating(adj, mask, k));
        }
    }
}
