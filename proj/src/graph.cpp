#include "oal/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace oal {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v)) continue;  // dedup, either orientation
        g.rows_[u].add(v);
        g.rows_[v].add(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::degree_in(int v, const VertexSet& X) const {
    check(v);
    if (X.universe() != n_) throw std::invalid_argument("degree_in: set universe mismatch");
    return rows_[v].intersection_size(X);
}

VertexSet Graph::neighbors_in(int v, const VertexSet& X) const {
    check(v);
    if (X.universe() != n_) throw std::invalid_argument("neighbors_in: set universe mismatch");
    return rows_[v] & X;
}

VertexSet Graph::boundary(const VertexSet& S) const {
    if (S.universe() != n_) throw std::invalid_argument("boundary: set universe mismatch");
    VertexSet out(n_);
    for (int v = S.next(0); v < n_; v = S.next(v + 1))
        out = out | rows_[v];
    return out - S;
}

DegreeSequence Graph::degree_sequence() const {
    DegreeSequence ds;
    ds.degrees.reserve(n_);
    for (int v = 0; v < n_; ++v) ds.degrees.push_back(degree(v));
    std::sort(ds.degrees.begin(), ds.degrees.end(), std::greater<int>());
    return ds;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return component_sizes().size() == 1;
}

std::vector<int> Graph::component_sizes() const {
    std::vector<int> sizes;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        int count = 0;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;  // already lexicographic: u ascending, adj_ sorted
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("line_graph: graph has no edges");
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
        }
    return Graph::from_edge_list(m, ledges);
}

}  // namespace oal
