#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "oal/families.hpp"
#include "oal/graph.hpp"
#include "oal/predicates.hpp"
#include "oal/reductions.hpp"
#include "oal/vertex_set.hpp"
#include "oracle.hpp"

using oal::Graph;
using oal::VertexSet;

TEST_CASE("Downshift gadget structure") {
    const Graph k4 = oal::complete_graph(4);
    const oal::ReductionArtifact art = oal::oa_downshift_gadget(k4, 3);
    const int n = 4, csize = 3;
    CHECK(art.kind == oal::GadgetKind::downshift);
    CHECK(art.r == 3);
    CHECK(art.preconditions_met);
    REQUIRE(art.gprime.order() == 3 * n + csize);
    REQUIRE(art.labels.size() == 15);
    CHECK(art.size_map(3) == 6);
    CHECK(art.labels[0].to_string() == "layer(0,1)");
    CHECK(art.labels[4].to_string() == "layer(0,2)");
    CHECK(art.labels[8].to_string() == "layer(0,3)");
    CHECK(art.labels[12].to_string() == "clique(1)");
    CHECK(art.labels[14].to_string() == "clique(3)");

    for (auto [u, v] : k4.edges()) {
        CHECK(art.gprime.adjacent(u, v));            // layer 1 copies G
        CHECK(art.gprime.adjacent(n + u, n + v));    // layer 2 copies G
        CHECK(!art.gprime.adjacent(2 * n + u, 2 * n + v));  // layer 3 does not
    }
    for (int u = 0; u < n; ++u) {
        CHECK(art.gprime.adjacent(u, 2 * n + u));
        CHECK(art.gprime.adjacent(n + u, 2 * n + u));
        CHECK(!art.gprime.adjacent(u, n + u));
        for (int j = 0; j < csize; ++j) CHECK(art.gprime.adjacent(2 * n + u, 3 * n + j));
    }
    for (int i = 0; i < csize; ++i)
        for (int j = i + 1; j < csize; ++j) CHECK(art.gprime.adjacent(3 * n + i, 3 * n + j));

    CHECK_THROWS_AS(oal::oa_downshift_gadget(k4, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(oal::oa_downshift_gadget(k4, 7), std::invalid_argument);  // empty clique
}

TEST_CASE("Downshift size correspondence: two equalities and one failure") {
    // (P2, r=1): source optimum 1, gadget optimum 2 = size_map(1)
    const oal::ReductionArtifact p2 = oal::oa_downshift_gadget(oal::path_graph(2), 1);
    const oracle::Best p2best = oracle::min_offensive(oracle::adj_of(p2.gprime), 0);
    REQUIRE(p2best.found());
    CHECK(p2best.size == 2);
    CHECK(p2best.size == p2.size_map(oracle::min_offensive(oracle::adj_of(oal::path_graph(2)), 1).size));

    // (C4, r=2): source optimum 2, gadget optimum 4
    const oal::ReductionArtifact c4 = oal::oa_downshift_gadget(oal::cycle_graph(4), 2);
    const oracle::Best c4best = oracle::min_offensive(oracle::adj_of(c4.gprime), 1);
    REQUIRE(c4best.found());
    CHECK(c4best.size == 4);
    CHECK(c4best.size == c4.size_map(2));

    // (K4, r=3): source optimum 3, but the gadget's true optimum is 7, not
    // size_map(3) = 6; layer 1 plus the clique is such a 7-vertex witness
    const oal::ReductionArtifact k4 = oal::oa_downshift_gadget(oal::complete_graph(4), 3);
    const oracle::Best k4best = oracle::min_offensive(oracle::adj_of(k4.gprime), 2);
    REQUIRE(k4best.found());
    CHECK(k4best.size == 7);
    CHECK(k4best.size != k4.size_map(3));
    const VertexSet seven = VertexSet::of(15, {0, 1, 2, 3, 12, 13, 14});
    CHECK(oal::is_offensive_r_alliance(k4.gprime, seven, 2).holds);
}

TEST_CASE("Downshift forward map never certifies") {
    const oal::ReductionArtifact art = oal::oa_downshift_gadget(oal::path_graph(2), 1);
    const VertexSet src = VertexSet::of(2, {0});
    REQUIRE(oal::is_offensive_r_alliance(art.source, src, 1).holds);
    CHECK_THROWS_AS(oal::map_certificate(art, src), std::logic_error);

    const oal::ReductionArtifact c4 = oal::oa_downshift_gadget(oal::cycle_graph(4), 2);
    CHECK_THROWS_AS(oal::map_certificate(c4, VertexSet::of(4, {0, 2})), std::logic_error);
    // a non-alliance source is rejected up front
    CHECK_THROWS_AS(oal::map_certificate(c4, VertexSet::of(4, {0})), std::invalid_argument);
}

TEST_CASE("Pendant-path gadget structure") {
    const Graph c4 = oal::cycle_graph(4);
    const oal::ReductionArtifact art = oal::goa_gadget_low(c4, 0);
    REQUIRE(art.gprime.order() == 12);  // each vertex grows one a-b path
    REQUIRE(art.labels.size() == 12);
    CHECK(art.size_map.scale == 1);
    CHECK(art.size_map.offset == -4 + 2 * 4);
    CHECK(art.size_map(2) == 6);
    CHECK(art.labels[0].to_string() == "original(0)");
    CHECK(art.labels[4].to_string() == "avertex(0,1)");
    CHECK(art.labels[8].to_string() == "bvertex(0,{1})");

    for (auto [u, v] : c4.edges()) CHECK(art.gprime.adjacent(u, v));
    for (int i = 0; i < 4; ++i) {
        CHECK(art.gprime.adjacent(i, 4 + i));      // v - a
        CHECK(art.gprime.adjacent(4 + i, 8 + i));  // a - b
        CHECK(art.gprime.degree(8 + i) == 1);
        CHECK(art.gprime.degree(4 + i) == 2);
    }

    CHECK_THROWS_AS(oal::goa_gadget_low(c4, 2), std::invalid_argument);               // r > 1
    CHECK_THROWS_AS(oal::goa_gadget_low(oal::path_graph(3), 1), std::invalid_argument);  // degree too small
    CHECK_THROWS_AS(oal::goa_gadget_low(c4, 1, 10), std::invalid_argument);           // budget
}

TEST_CASE("Pendant-path gadget size correspondence") {
    struct Row {
        Graph g;
        int r;
        int expect;
    };
    const std::vector<Row> rows = {{oal::cycle_graph(4), 1, 10},
                                   {oal::cycle_graph(4), 0, 6},
                                   {oal::complete_graph(4), -1, 5}};
    for (const Row& row : rows) {
        const oal::ReductionArtifact art = oal::goa_gadget_low(row.g, row.r);
        const oracle::Best best = oracle::min_global_offensive(oracle::adj_of(art.gprime), row.r);
        REQUIRE(best.found());
        CHECK(best.size == row.expect);
        const oracle::Best dom = oracle::min_dominating(oracle::adj_of(row.g));
        CHECK(best.size == art.size_map(dom.size));
    }
}

TEST_CASE("Subset-attachment gadget structure") {
    const Graph k3 = oal::complete_graph(3);
    const oal::ReductionArtifact art = oal::goa_gadget_high(k3, 2);
    REQUIRE(art.gprime.order() == 21);  // 3 originals, 9 a-vertices, 9 b-vertices
    REQUIRE(art.labels.size() == 21);
    CHECK(art.size_map(1) == 10);
    CHECK(art.labels[3].to_string() == "avertex(0,1)");
    CHECK(art.labels[12].to_string() == "bvertex(0,{1,2})");
    CHECK(art.labels[13].to_string() == "bvertex(0,{1,3})");
    CHECK(art.labels[14].to_string() == "bvertex(0,{2,3})");

    // A(0) = {3,4,5}; the three b-vertices cover its 2-subsets exactly
    CHECK(art.gprime.neighbors(12) == std::vector<int>{3, 4});
    CHECK(art.gprime.neighbors(13) == std::vector<int>{3, 5});
    CHECK(art.gprime.neighbors(14) == std::vector<int>{4, 5});
    for (int a = 3; a < 12; ++a) {
        for (int b = 3; b < 12; ++b) CHECK(!art.gprime.adjacent(a, b));  // A independent
        CHECK(art.gprime.degree(a) == 3);  // its vertex plus C(2,1) subsets
    }

    CHECK_THROWS_AS(oal::goa_gadget_high(k3, 1), std::invalid_argument);      // r < 2
    CHECK_THROWS_AS(oal::goa_gadget_high(k3, 2, 10), std::invalid_argument);  // budget
    CHECK_THROWS_AS(oal::goa_gadget_high(Graph::from_edge_list(3, {{0, 1}}), 2), std::invalid_argument);
}

TEST_CASE("Subset-attachment gadget size correspondence and its failure") {
    // (K3, r=2): dominating number 1, gadget optimum 10 = size_map(1)
    const oal::ReductionArtifact k3 = oal::goa_gadget_high(oal::complete_graph(3), 2);
    const oracle::Best k3best = oracle::min_global_offensive(oracle::adj_of(k3.gprime), 2);
    REQUIRE(k3best.found());
    CHECK(k3best.size == 10);
    CHECK(k3best.size == k3.size_map(1));

    // (P2, r=2): size_map(1) = 5, yet a 4-vertex set certifies: both
    // originals plus both b-vertices. Each a-vertex then has its entire
    // neighborhood inside the set, which is what the claimed lower-bound
    // argument misses when delta(v) = 1 collapses B(v) onto all of A(v).
    const oal::ReductionArtifact p2 = oal::goa_gadget_high(oal::path_graph(2), 2);
    REQUIRE(p2.gprime.order() == 8);
    CHECK(p2.size_map(1) == 5);
    const oracle::Best p2best = oracle::min_global_offensive(oracle::adj_of(p2.gprime), 2);
    REQUIRE(p2best.found());
    CHECK(p2best.size == 4);
    CHECK(oal::is_global_offensive_r_alliance(p2.gprime, VertexSet::of(8, {0, 1, 6, 7}), 2).holds);
}

TEST_CASE("Dominating sets map through the attachment gadgets") {
    const oal::ReductionArtifact low = oal::goa_gadget_low(oal::cycle_graph(4), 1);
    const VertexSet mapped = oal::map_certificate(low, VertexSet::of(4, {0, 2}));
    CHECK(mapped.size() == low.size_map(2));
    CHECK(oal::is_global_offensive_r_alliance(low.gprime, mapped, 1).holds);

    const oal::ReductionArtifact high = oal::goa_gadget_high(oal::complete_graph(3), 2);
    const VertexSet hmapped = oal::map_certificate(high, VertexSet::of(3, {0}));
    CHECK(hmapped.size() == high.size_map(1));
    CHECK(oal::is_global_offensive_r_alliance(high.gprime, hmapped, 2).holds);

    CHECK_THROWS_AS(oal::map_certificate(low, VertexSet::of(4, {0})), std::invalid_argument);
    CHECK_THROWS_AS(oal::map_certificate(low, VertexSet::of(5, {0, 2})), std::invalid_argument);
}

TEST_CASE("Vertex cover equivalence on regular graphs") {
    const std::vector<Graph> cubic = {oal::complete_graph(4), oal::complete_bipartite(3, 3),
                                      oal::prism_graph(), oal::petersen_graph()};
    for (const Graph& g : cubic) {
        CHECK(oal::verify_regular_vc_equivalence(g, 2));
        CHECK(oal::verify_regular_vc_equivalence(g, 3));
    }
    CHECK(oal::verify_regular_vc_equivalence(oal::hypercube_graph(3), 3));
    CHECK(oal::verify_regular_vc_equivalence(oal::complete_graph(5), 4));

    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(oal::path_graph(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(oal::cycle_graph(5), 3), std::invalid_argument);
    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(oal::cycle_graph(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(oal::complete_graph(4), 1), std::invalid_argument);
    const Graph split = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(split, 2), std::invalid_argument);
    CHECK_THROWS_AS(oal::verify_regular_vc_equivalence(oal::hypercube_graph(5), 5), std::invalid_argument);
}
