#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oal/graph.hpp"
#include "oal/solvers.hpp"
#include "oal/spectral.hpp"

namespace oal {

enum class BoundKind { lower, upper };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    int value = 0;
    bool applicable = false;
    bool flagged_falsified = false;  // printed ceiling form of the degree upper bound
    std::string note;
};

struct BoundsReport {
    int r = 0;
    std::vector<BoundEntry> entries;
    std::optional<int> exact;  // gamma_r^o when the exact solver ran

    const BoundEntry* find(const std::string& name) const;
};

/// Degree bounds around gamma_r^o for r in {2-delta, ..., delta}:
/// lower ceil((delta+r)/2); the published upper ceiling form
/// n - ceil((delta-r+2)/2) next to the form the underlying construction
/// actually yields, n - floor((delta-r+2)/2). The ceiling form overshoots
/// whenever delta+r is odd, so validity checks must use upper_proof.
struct DegreeBounds {
    int lower = 0;
    int upper_printed = 0;
    int upper_proof = 0;
    bool applicable = false;
};
DegreeBounds degree_bounds(const Graph& g, int r);

/// ceil((n / mu) * ceil((delta+r)/2)) with mu inflated by eps_safety so
/// eigensolver error can only weaken the bound. Connected graphs only.
int spectral_lower_bound(const Graph& g, int r, double tol = 1e-8);
int spectral_lower_bound_given_mu(int n, int min_degree, int r, double mu_star, double eps_safety = 1e-8);

/// floor((gamma_r + n)/2) where gamma_r is the exact r-domination number.
std::optional<int> kdom_upper_bound(const Graph& g, int r, int gamma_r);

/// floor(n(2r+1)/(2r+2)) for 1 <= r <= delta; integer arithmetic only.
std::optional<int> cockayne_upper_bound(const Graph& g, int r);

/// Lower bound on gamma_r^o of the line graph of a delta-regular graph:
/// (n/4) * ceil((2(delta-1)+r)/2). `value` carries the integer ceiling of
/// that quantity, `raw` the unrounded rational; mu_line is the verified
/// Laplacian spectral radius of L(G), which must equal 2*delta.
struct LineGraphBound {
    bool applicable = false;
    int value = 0;
    double raw = 0;
    double mu_line = 0;
};
LineGraphBound line_graph_lower_bound(const Graph& g, int r, double tol = 1e-8);

/// gamma_{ceil((delta+r)/2)}(G) <= gamma_r^o(G) <= n - alpha(G);
/// the upper half requires r <= delta (and delta >= 1).
struct SandwichBounds {
    int lower = 0;
    std::optional<int> upper;
};
SandwichBounds sandwich_bounds(const Graph& g, int r, int alpha, int gamma_k);

/// Exact closed form on complete graphs: ceil((n+r-1)/2) for 3-n <= r <= n-1.
int kn_formula(int n, int r);

struct BoundsReportOptions {
    bool with_exact = true;  // solve gamma_r^o itself; bound subproblems
                             // (gamma_r, gamma_k, alpha) follow the budget alone
    SolveOptions solve;
    double tol = 1e-8;
};

/// Assembles every bound on gamma_r^o(G) into one report. Bounds whose
/// preconditions fail are included as inapplicable entries with a note.
BoundsReport bounds_report(const Graph& g, int r, const BoundsReportOptions& opt = {});

}  // namespace oal
