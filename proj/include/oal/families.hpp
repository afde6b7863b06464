#pragma once

#include <cstdint>
#include <string>

#include "oal/graph.hpp"

namespace oal {

Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n >= 1
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph prism_graph();        // K3 x K2, 3-regular on 6 vertices
Graph hypercube_graph(int dim);

/// d-regular graph on n vertices via the pairing model with rejection.
/// Deterministic for a fixed seed. Requires n*d even and d < n.
Graph random_regular_graph(int n, int d, std::uint64_t seed);

struct FamilyParams {
    int n = 0;
    int a = 0, b = 0;     // complete_bipartite
    int d = 0;            // random_regular, hypercube
    std::uint64_t seed = 0;
};

/// Dispatch by family name: complete, cycle, path, complete_bipartite,
/// petersen, prism, random_regular, hypercube. Unknown name is an error.
Graph generate(const std::string& family, const FamilyParams& params);

}  // namespace oal
