#pragma once

#include <cstdint>
#include <stdexcept>

#include "oal/graph.hpp"
#include "oal/vertex_set.hpp"

namespace oal {

struct SolveOptions {
    int max_n = 40;            // exact search refuses larger graphs
    bool allow_large = false;  // override for the guardrail
    int max_cardinality = -1;  // stop after this cardinality (-1: unbounded)
    double time_limit_s = 0;   // 0: no limit
};

/// Raised when a search exceeds its time limit.
class SolveTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact optimum plus the lexicographically smallest witness of that size.
/// optimum stays -1 when a cardinality-bounded search exhausts its bound.
struct SolveResult {
    int optimum = -1;
    VertexSet witness;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    double ms = 0;

    bool found() const { return optimum >= 0; }
};

/// a_r^o: minimum cardinality of an offensive r-alliance.
SolveResult min_offensive_alliance(const Graph& g, int r, const SolveOptions& opt = {});

/// gamma_r^o: minimum cardinality of a global offensive r-alliance.
/// Always <= n since S = V holds vacuously.
SolveResult min_global_offensive_alliance(const Graph& g, int r, const SolveOptions& opt = {});

SolveResult min_dominating(const Graph& g, const SolveOptions& opt = {});

/// gamma_k. For k > max degree the only k-dominating set is V; that set is
/// returned rather than raising an error.
SolveResult min_k_dominating(const Graph& g, int k, const SolveOptions& opt = {});

/// alpha(G), witness is the lexicographically smallest maximum independent set.
SolveResult independence_number(const Graph& g, const SolveOptions& opt = {});

/// Minimum vertex cover; cross-checked against n - alpha(G) on every call.
SolveResult min_vertex_cover(const Graph& g, const SolveOptions& opt = {});

/// ceil(x/2) and floor(x/2) for possibly negative x.
constexpr int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }
constexpr int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace oal
