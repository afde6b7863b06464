#include "oal/families.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace oal {

namespace {

// Bounded uniform draw by rejection; avoids distribution objects so the
// sequence is identical across standard library implementations.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[bounded_rand(rng, i)]);
}

}  // namespace

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, es);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, es);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: both sides >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, es);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(i, i + 5);                // spokes
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edge_list(10, es);
}

Graph prism_graph() {
    return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph hypercube_graph(int dim) {
    if (dim < 1 || dim > 20) throw std::invalid_argument("hypercube_graph: dim in [1,20] required");
    const int n = 1 << dim;
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v & (1 << b))) es.emplace_back(v, v | (1 << b));
    return Graph::from_edge_list(n, es);
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("random_regular_graph: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular_graph: n*d must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n) * d);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i / d);

    const int max_attempts = 100000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        shuffle_vec(points, rng);
        bool simple = true;
        std::vector<VertexSet> rows(n, VertexSet(n));
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || rows[u].contains(v)) {
                simple = false;
                break;
            }
            rows[u].add(v);
            rows[v].add(u);
            es.emplace_back(u, v);
        }
        if (simple) return Graph::from_edge_list(n, es);
    }
    throw std::runtime_error("random_regular_graph: rejection sampling failed to produce a simple graph");
}

Graph generate(const std::string& family, const FamilyParams& p) {
    if (family == "complete") return complete_graph(p.n);
    if (family == "cycle") return cycle_graph(p.n);
    if (family == "path") return path_graph(p.n);
    if (family == "complete_bipartite") return complete_bipartite(p.a, p.b);
    if (family == "petersen") return petersen_graph();
    if (family == "prism") return prism_graph();
    if (family == "hypercube") return hypercube_graph(p.d);
    if (family == "random_regular") return random_regular_graph(p.n, p.d, p.seed);
    throw std::invalid_argument("generate: unknown family '" + family + "'");
}

}  // namespace oal
