#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oal/families.hpp"
#include "oal/graph.hpp"
#include "oal/spectral.hpp"
#include "oal/vertex_set.hpp"

using oal::Graph;
using oal::VertexSet;

namespace {

double mu_of(const Graph& g) { return oal::laplacian_spectral_radius(g).mu_star; }

// same mixer the library uses elsewhere, seeded independently here
std::uint64_t mix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("Laplacian spectral radius on closed-form graphs") {
    for (int n = 2; n <= 8; ++n)
        CHECK(mu_of(oal::complete_graph(n)) == doctest::Approx(n).epsilon(1e-7));
    CHECK(mu_of(oal::complete_bipartite(1, 3)) == doctest::Approx(4.0).epsilon(1e-7));
    CHECK(mu_of(oal::cycle_graph(4)) == doctest::Approx(4.0).epsilon(1e-7));
    CHECK(mu_of(oal::cycle_graph(6)) == doctest::Approx(4.0).epsilon(1e-7));
    // odd cycle: 2 - 2cos(2*pi*floor(n/2)/n), strictly below 4
    CHECK(mu_of(oal::cycle_graph(5)) == doctest::Approx(2.0 + 2.0 * std::cos(M_PI / 5)).epsilon(1e-7));
    CHECK(mu_of(oal::petersen_graph()) == doctest::Approx(5.0).epsilon(1e-7));
    for (int d = 1; d <= 4; ++d)
        CHECK(mu_of(oal::hypercube_graph(d)) == doctest::Approx(2.0 * d).epsilon(1e-7));
}

TEST_CASE("Path regression: dominant pair found despite symmetric start traps") {
    // P3 has dominant eigenvector (1,-2,1); any start orthogonal to it sends
    // plain power iteration to the eigenvalue 1 with a tiny residual.
    CHECK(mu_of(oal::path_graph(3)) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(mu_of(oal::line_graph(oal::complete_graph(4))) == doctest::Approx(6.0).epsilon(1e-7));
}

TEST_CASE("Report carries convergence evidence") {
    for (const Graph& g : {oal::petersen_graph(), oal::path_graph(3), oal::cycle_graph(7)}) {
        const oal::SpectralReport rep = oal::laplacian_spectral_radius(g);
        CHECK(static_cast<int>(rep.rayleigh_witness.size()) == g.order());
        CHECK(rep.mu_star > 0);
        CHECK(rep.residual <= 1e-6 * std::max(1.0, rep.mu_star));
        double norm = 0;
        for (double c : rep.rayleigh_witness) norm += c * c;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("Indicator inequality holds for random subsets") {
    const std::vector<Graph> corpus = {oal::complete_graph(5),  oal::cycle_graph(6),
                                       oal::path_graph(7),      oal::complete_bipartite(2, 4),
                                       oal::petersen_graph(),   oal::prism_graph(),
                                       oal::hypercube_graph(3), oal::random_regular_graph(10, 3, 7)};
    std::uint64_t state = 99;
    for (const Graph& g : corpus) {
        const int n = g.order();
        const double mu = mu_of(g);
        int tried = 0;
        while (tried < 200) {
            const std::uint64_t bits = mix(state);
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((bits >> v) & 1u) s.add(v);
            if (s.empty() || s.size() == n) continue;
            ++tried;
            CHECK(oal::fiedler_indicator_check(g, s, mu));
        }
    }
}

TEST_CASE("Indicator inequality is tight on extremal cuts") {
    // K5 with any 3-set: n*cut = 5*6 = mu*|S|*(n-|S|) = 5*3*2
    const Graph k5 = oal::complete_graph(5);
    CHECK(oal::fiedler_indicator_check(k5, VertexSet::of(5, {0, 1, 2}), 5.0));
    CHECK(oal::fiedler_indicator_check(k5, VertexSet::of(5, {2, 3, 4}), 5.0));
    // C4 with the antipodal pair: 4*4 = 4*2*2
    CHECK(oal::fiedler_indicator_check(oal::cycle_graph(4), VertexSet::of(4, {0, 2}), 4.0));
    // and a strictly smaller mu must reject that tight cut
    CHECK(!oal::fiedler_indicator_check(oal::cycle_graph(4), VertexSet::of(4, {0, 2}), 3.9));
}

TEST_CASE("Spectral argument validation") {
    CHECK_THROWS_AS(oal::laplacian_spectral_radius(oal::path_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(oal::laplacian_spectral_radius(oal::cycle_graph(4), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(oal::laplacian_spectral_radius(oal::cycle_graph(4), -1e-9), std::invalid_argument);

    const Graph c4 = oal::cycle_graph(4);
    CHECK_THROWS_AS(oal::fiedler_indicator_check(c4, VertexSet(4), 4.0), std::invalid_argument);
    CHECK_THROWS_AS(oal::fiedler_indicator_check(c4, VertexSet::full(4), 4.0), std::invalid_argument);
    CHECK_THROWS_AS(oal::fiedler_indicator_check(c4, VertexSet::of(5, {0}), 4.0), std::invalid_argument);
}
