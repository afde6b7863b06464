#include "oal/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oal/predicates.hpp"

namespace oal {

const BoundEntry* BoundsReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

DegreeBounds degree_bounds(const Graph& g, int r) {
    DegreeBounds b;
    const int delta = g.min_degree();
    const int n = g.order();
    b.applicable = (r >= 2 - delta && r <= delta);
    b.lower = ceil_half(delta + r);
    b.upper_printed = n - ceil_half(delta - r + 2);
    b.upper_proof = n - floor_half(delta - r + 2);
    return b;
}

int spectral_lower_bound_given_mu(int n, int min_degree, int r, double mu_star, double eps_safety) {
    if (mu_star <= 0) throw std::invalid_argument("spectral_lower_bound: mu_star must be positive");
    const double mu_hat = mu_star * (1.0 + eps_safety);
    const int c = ceil_half(min_degree + r);
    return static_cast<int>(std::ceil(static_cast<double>(n) * c / mu_hat));
}

int spectral_lower_bound(const Graph& g, int r, double tol) {
    if (!g.is_connected())
        throw std::invalid_argument("spectral_lower_bound: graph must be connected (treat components separately)");
    const SpectralReport sr = laplacian_spectral_radius(g, tol);
    return spectral_lower_bound_given_mu(g.order(), g.min_degree(), r, sr.mu_star, tol);
}

std::optional<int> kdom_upper_bound(const Graph& g, int r, int gamma_r) {
    if (r < 1) return std::nullopt;
    return (gamma_r + g.order()) / 2;
}

std::optional<int> cockayne_upper_bound(const Graph& g, int r) {
    if (r < 1 || r > g.min_degree()) return std::nullopt;
    const long long n = g.order();
    return static_cast<int>(n * (2LL * r + 1) / (2LL * r + 2));
}

LineGraphBound line_graph_lower_bound(const Graph& g, int r, double tol) {
    LineGraphBound b;
    const int delta = g.min_degree();
    if (!g.is_regular() || delta < 2 || !g.is_connected()) return b;
    const int dl = 2 * (delta - 1);  // regularity degree of the line graph
    if (r < 2 - dl || r > dl) return b;

    const Graph lg = line_graph(g);
    const SpectralReport sr = laplacian_spectral_radius(lg, tol);
    b.mu_line = sr.mu_star;
    // mu(L(G)) = 2(delta-1) - lambda_min <= 2*delta since lambda_min >= -2;
    // equality needs an eigenvalue -2, which every regular graph here has
    // except odd cycles (delta = 2, n odd)
    if (b.mu_line > 2.0 * delta * (1.0 + 10 * tol))
        throw std::logic_error("line_graph_lower_bound: mu(L(G)) exceeds 2*delta");
    if (delta >= 3 || g.order() % 2 == 0) {
        if (std::abs(b.mu_line - 2.0 * delta) > 2.0 * delta * 10 * tol)
            throw std::logic_error("line_graph_lower_bound: mu(L(G)) != 2*delta on a graph that has -2 in its line-graph spectrum");
    }

    const int c = delta - 1 + ceil_half(r);  // ceil((2(delta-1)+r)/2)
    const long long num = static_cast<long long>(g.order()) * c;
    b.raw = static_cast<double>(num) / 4.0;
    b.value = static_cast<int>(num >= 0 ? (num + 3) / 4 : -((-num) / 4));
    b.applicable = true;
    return b;
}

SandwichBounds sandwich_bounds(const Graph& g, int r, int alpha, int gamma_k) {
    SandwichBounds s;
    s.lower = gamma_k;
    if (r <= g.min_degree() && g.min_degree() >= 1) s.upper = g.order() - alpha;
    return s;
}

int kn_formula(int n, int r) {
    if (n < 2) throw std::invalid_argument("kn_formula: n >= 2 required");
    if (r < 3 - n || r > n - 1)
        throw std::invalid_argument("kn_formula: r=" + std::to_string(r) + " outside {3-n,...,n-1}");
    return ceil_half(n + r - 1);
}

BoundsReport bounds_report(const Graph& g, int r, const BoundsReportOptions& opt) {
    BoundsReport rep;
    rep.r = r;
    const int n = g.order();
    const int delta = g.min_degree();
    // with_exact gates only the gamma_r^o solve; the cheaper bound
    // subproblems (gamma_r, gamma_k, alpha) run whenever the order fits
    const bool solver_ok = n <= opt.solve.max_n || opt.solve.allow_large;

    const DegreeBounds db = degree_bounds(g, r);
    const std::string range_note = db.applicable ? "" : "r outside {2-delta,...,delta}";
    rep.entries.push_back({"degree_lower", BoundKind::lower, db.lower, db.applicable, false, range_note});
    rep.entries.push_back({"degree_upper_printed", BoundKind::upper, db.upper_printed, db.applicable, true,
                           db.applicable ? "as printed (falsified when delta+r is odd)" : range_note});
    rep.entries.push_back({"degree_upper_proof", BoundKind::upper, db.upper_proof, db.applicable, false, range_note});

    if (g.is_connected() && n >= 2) {
        rep.entries.push_back({"spectral_lower", BoundKind::lower, spectral_lower_bound(g, r, opt.tol), true, false, ""});
    } else {
        rep.entries.push_back({"spectral_lower", BoundKind::lower, 0, false, false, "graph not connected"});
    }

    if (r >= 1 && solver_ok) {
        const int gamma_r = min_k_dominating(g, r, opt.solve).optimum;
        rep.entries.push_back({"kdom_upper", BoundKind::upper, *kdom_upper_bound(g, r, gamma_r), true, false, ""});
    } else {
        rep.entries.push_back({"kdom_upper", BoundKind::upper, 0, false, false,
                               r < 1 ? "requires r >= 1" : "exceeds solver budget"});
    }

    if (auto ck = cockayne_upper_bound(g, r)) {
        rep.entries.push_back({"cockayne_upper", BoundKind::upper, *ck, true, false, ""});
    } else {
        rep.entries.push_back({"cockayne_upper", BoundKind::upper, 0, false, false, "requires 1 <= r <= delta"});
    }

    if (solver_ok && r >= 2 - delta) {
        const int k = std::max(1, ceil_half(delta + r));
        const int gamma_k = min_k_dominating(g, k, opt.solve).optimum;
        const int alpha = independence_number(g, opt.solve).optimum;
        const SandwichBounds sw = sandwich_bounds(g, r, alpha, gamma_k);
        rep.entries.push_back({"sandwich_lower", BoundKind::lower, sw.lower, true, false,
                               "k-domination with k=" + std::to_string(k)});
        if (sw.upper)
            rep.entries.push_back({"sandwich_upper", BoundKind::upper, *sw.upper, true, false, "n - alpha"});
        else
            rep.entries.push_back({"sandwich_upper", BoundKind::upper, 0, false, false, "requires r <= delta >= 1"});
    } else {
        const std::string why = solver_ok ? "requires r >= 2-delta" : "exceeds solver budget";
        rep.entries.push_back({"sandwich_lower", BoundKind::lower, 0, false, false, why});
        rep.entries.push_back({"sandwich_upper", BoundKind::upper, 0, false, false, why});
    }

    if (opt.with_exact && solver_ok && valid_r_range(g).contains(r))
        rep.exact = min_global_offensive_alliance(g, r, opt.solve).optimum;

    return rep;
}

}  // namespace oal
