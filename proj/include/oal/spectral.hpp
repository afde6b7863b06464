#pragma once

#include <vector>

#include "oal/graph.hpp"
#include "oal/vertex_set.hpp"

namespace oal {

/// Largest Laplacian eigenvalue with its convergence evidence.
struct SpectralReport {
    double mu_star = 0;
    int iterations = 0;
    double residual = 0;                    // ||L x - mu x|| with ||x|| = 1
    std::vector<double> rayleigh_witness;   // converged direction
    bool dense_fallback = false;
};

/// Power iteration on L = D - A from a fixed pseudorandom start, with the
/// scalar validated against a dense symmetric eigensolve; the dense value is
/// adopted (dense_fallback) when iteration stalls or lands on a non-dominant
/// eigenpair. Result is within relative tol of the true spectral radius.
SpectralReport laplacian_spectral_radius(const Graph& g, double tol = 1e-8);

/// Variational check: the 0/1 indicator of S plugged into the Laplacian
/// Rayleigh quotient must stay below mu_star, i.e.
/// n * cut(S, S-bar) <= mu_star * (1 + tol) * |S| * (n - |S|).
/// Requires a nonempty proper subset.
bool fiedler_indicator_check(const Graph& g, const VertexSet& S, double mu_star, double tol = 1e-8);

}  // namespace oal
