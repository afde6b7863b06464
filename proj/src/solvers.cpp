#include "oal/solvers.hpp"

#include <algorithm>
#include <chrono>

#include "oal/predicates.hpp"

namespace oal {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchState {
    VertexSet current;
    VertexSet witness;
    bool found = false;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    Clock::time_point deadline{};
    bool has_deadline = false;

    explicit SearchState(int n) : current(n), witness(n) {}

    void tick() {
        if (++nodes % 8192 == 0 && has_deadline && Clock::now() > deadline)
            throw SolveTimeout("exact search exceeded its time limit");
    }
};

// Enumerates k-subsets in lexicographic order of their member lists; the
// first accepted set is therefore the lex-min witness of that cardinality.
// Policies prune via prefix_viable: vertices < start and outside the current
// set are fixed out, and a constraint that no completion can repair kills
// the subtree. Pruning must stay sound (never rejects a feasible completion)
// or the minimality certificate is lost.
template <class Policy>
bool search_rec(SearchState& st, const Policy& pol, int start, int rem) {
    st.tick();
    if (rem == 0) {
        if (pol.accepts(st.current)) {
            st.witness = st.current;
            st.found = true;
            return true;
        }
        return false;
    }
    if (!pol.prefix_viable(st.current, start, rem)) {
        ++st.pruned;
        return false;
    }
    const int n = st.current.universe();
    for (int v = start; v <= n - rem; ++v) {
        if (!pol.can_add(st.current, v)) continue;
        st.current.add(v);
        if (search_rec(st, pol, v + 1, rem - 1)) return true;
        st.current.remove(v);
    }
    return false;
}

void enforce_guardrail(const Graph& g, const SolveOptions& opt) {
    if (g.order() > opt.max_n && !opt.allow_large)
        throw std::invalid_argument("exact solver: graph order " + std::to_string(g.order()) +
                                    " exceeds the budget of " + std::to_string(opt.max_n) +
                                    " (set allow_large to override)");
}

template <class Policy>
SolveResult solve_min_cardinality(const Graph& g, const Policy& pol, int floor_k, const SolveOptions& opt) {
    enforce_guardrail(g, opt);
    const int n = g.order();
    const auto t0 = Clock::now();
    SearchState st(n);
    if (opt.time_limit_s > 0) {
        st.has_deadline = true;
        st.deadline = t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.time_limit_s));
    }
    const int kmax = opt.max_cardinality >= 0 ? std::min(opt.max_cardinality, n) : n;
    SolveResult res;
    for (int k = std::max(floor_k, 0); k <= kmax && !st.found; ++k)
        search_rec(st, pol, 0, k);
    res.nodes = st.nodes;
    res.pruned = st.pruned;
    res.witness = st.found ? st.witness : VertexSet(n);
    res.optimum = st.found ? res.witness.size() : -1;
    res.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

// Lower bound on any (global) offensive r-alliance: a set with nonempty
// boundary has some outside vertex v with 2*delta_S(v) >= delta(v) + r and
// delta_S(v) <= |S|. On a connected graph only S = V escapes that case.
int alliance_floor(const Graph& g, int r) {
    if (!g.is_connected()) return 1;
    return std::clamp(ceil_half(g.min_degree() + r), 1, g.order());
}

void require_alliance_args(const Graph& g, int r) {
    if (g.order() == 0) throw std::invalid_argument("exact solver: graph is empty");
    const RRange range = valid_r_range(g);
    if (!range.contains(r))
        throw std::invalid_argument("exact solver: r=" + std::to_string(r) + " outside valid range [" +
                                    std::to_string(range.lo) + "," + std::to_string(range.hi) + "]");
}

struct OffensivePolicy {
    const Graph& g;
    int r;

    bool accepts(const VertexSet& S) const {
        const int n = g.order();
        for (int v = 0; v < n; ++v) {
            if (S.contains(v)) continue;
            const int in_s = g.degree_in(v, S);
            if (in_s == 0) continue;  // not on the boundary
            if (2 * in_s < g.degree(v) + r) return false;
        }
        return true;
    }

    bool prefix_viable(const VertexSet& P, int start, int rem) const {
        for (int v = 0; v < start; ++v) {
            if (P.contains(v)) continue;
            const int d_in = g.degree_in(v, P);
            if (d_in == 0) continue;  // may still avoid the boundary
            const int need = ceil_half(g.degree(v) + r) - d_in;
            if (need <= 0) continue;
            const int fwd = g.neighbor_set(v).count_from(start);
            if (std::min(rem, fwd) < need) return false;
        }
        return true;
    }

    bool can_add(const VertexSet&, int) const { return true; }
};

struct GlobalOffensivePolicy {
    const Graph& g;
    int r;

    bool accepts(const VertexSet& S) const {
        const int n = g.order();
        for (int v = 0; v < n; ++v) {
            if (S.contains(v)) continue;
            const int in_s = g.degree_in(v, S);
            if (in_s == 0) return false;  // undominated
            if (2 * in_s < g.degree(v) + r) return false;
        }
        return true;
    }

    bool prefix_viable(const VertexSet& P, int start, int rem) const {
        for (int v = 0; v < start; ++v) {
            if (P.contains(v)) continue;
            const int d_in = g.degree_in(v, P);
            const int need = std::max(1, ceil_half(g.degree(v) + r)) - d_in;
            if (need <= 0) continue;
            const int fwd = g.neighbor_set(v).count_from(start);
            if (std::min(rem, fwd) < need) return false;
        }
        return true;
    }

    bool can_add(const VertexSet&, int) const { return true; }
};

struct KDominationPolicy {
    const Graph& g;
    int k;

    bool accepts(const VertexSet& S) const { return is_k_dominating(g, S, k); }

    bool prefix_viable(const VertexSet& P, int start, int rem) const {
        for (int v = 0; v < start; ++v) {
            if (P.contains(v)) continue;
            const int need = k - g.degree_in(v, P);
            if (need <= 0) continue;
            const int fwd = g.neighbor_set(v).count_from(start);
            if (std::min(rem, fwd) < need) return false;
        }
        return true;
    }

    bool can_add(const VertexSet&, int) const { return true; }
};

struct VertexCoverPolicy {
    const Graph& g;

    bool accepts(const VertexSet& S) const { return is_vertex_cover(g, S); }

    bool prefix_viable(const VertexSet& P, int start, int rem) const {
        (void)rem;
        const VertexSet out = VertexSet::prefix(g.order(), start) - P;
        for (int v = out.next(0); v < g.order(); v = out.next(v + 1))
            if (g.neighbor_set(v).intersects(out)) return false;  // edge with both ends fixed out
        return true;
    }

    bool can_add(const VertexSet&, int) const { return true; }
};

struct IndependentPolicy {
    const Graph& g;

    bool accepts(const VertexSet& S) const { return is_independent(g, S); }
    bool prefix_viable(const VertexSet&, int, int) const { return true; }
    bool can_add(const VertexSet& P, int v) const { return g.degree_in(v, P) == 0; }
};

void certify(const Graph& g, const SolveResult& res, bool global_mode, int r) {
    if (!res.found()) return;
    const AllianceReport rep = global_mode ? is_global_offensive_r_alliance(g, res.witness, r)
                                           : is_offensive_r_alliance(g, res.witness, r);
    if (!rep.holds)
        throw std::logic_error("exact solver: witness failed its own predicate (search bug)");
}

}  // namespace

SolveResult min_offensive_alliance(const Graph& g, int r, const SolveOptions& opt) {
    require_alliance_args(g, r);
    SolveResult res = solve_min_cardinality(g, OffensivePolicy{g, r}, alliance_floor(g, r), opt);
    certify(g, res, false, r);
    return res;
}

SolveResult min_global_offensive_alliance(const Graph& g, int r, const SolveOptions& opt) {
    require_alliance_args(g, r);
    SolveResult res = solve_min_cardinality(g, GlobalOffensivePolicy{g, r}, alliance_floor(g, r), opt);
    certify(g, res, true, r);
    return res;
}

SolveResult min_dominating(const Graph& g, const SolveOptions& opt) {
    return min_k_dominating(g, 1, opt);
}

SolveResult min_k_dominating(const Graph& g, int k, const SolveOptions& opt) {
    if (g.order() == 0) throw std::invalid_argument("exact solver: graph is empty");
    if (k < 1) throw std::invalid_argument("min_k_dominating: k >= 1 required");
    if (k > g.max_degree()) {
        // no vertex outside S can ever collect k neighbors, so S = V
        SolveResult res;
        res.witness = VertexSet::full(g.order());
        res.optimum = g.order();
        return res;
    }
    return solve_min_cardinality(g, KDominationPolicy{g, k}, 1, opt);
}

SolveResult independence_number(const Graph& g, const SolveOptions& opt) {
    enforce_guardrail(g, opt);
    const int n = g.order();
    const auto t0 = Clock::now();
    SearchState st(n);
    if (opt.time_limit_s > 0) {
        st.has_deadline = true;
        st.deadline = t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.time_limit_s));
    }
    const IndependentPolicy pol{g};
    SolveResult res;
    res.witness = VertexSet(n);
    res.optimum = 0;
    // grow k while a feasible independent set exists; independence is
    // downward closed, so the first infeasible k is final
    for (int k = 1; k <= n; ++k) {
        st.found = false;
        st.current = VertexSet(n);
        if (!search_rec(st, pol, 0, k)) break;
        res.witness = st.witness;
        res.optimum = k;
    }
    res.nodes = st.nodes;
    res.pruned = st.pruned;
    res.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

SolveResult min_vertex_cover(const Graph& g, const SolveOptions& opt) {
    SolveResult res = solve_min_cardinality(g, VertexCoverPolicy{g}, 0, opt);
    const SolveResult alpha = independence_number(g, opt);
    if (res.optimum != g.order() - alpha.optimum)
        throw std::logic_error("oracle integrity: min vertex cover " + std::to_string(res.optimum) +
                               " != n - alpha = " + std::to_string(g.order() - alpha.optimum));
    return res;
}

}  // namespace oal
