#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oal/vertex_set.hpp"

namespace oal {

/// Degrees sorted non-increasing: front() is the maximum degree, back() the minimum.
struct DegreeSequence {
    std::vector<int> degrees;

    int max() const { return degrees.empty() ? 0 : degrees.front(); }
    int min() const { return degrees.empty() ? 0 : degrees.back(); }
};

/// Immutable simple undirected graph. Adjacency is kept twice: sorted
/// neighbor lists for iteration and per-vertex bitset rows for O(words)
/// neighborhood counts inside subset searches.
class Graph {
public:
    /// Builds from an edge list. Duplicate edges (in either orientation) are
    /// merged; self-loops and out-of-range endpoints are input errors.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    const VertexSet& neighbor_set(int v) const { return rows_[check(v)]; }

    bool adjacent(int u, int v) const { return rows_[check(u)].contains(check(v)); }

    /// delta_X(v): number of neighbors v has in X.
    int degree_in(int v, const VertexSet& X) const;

    /// N_X(v) as a set.
    VertexSet neighbors_in(int v, const VertexSet& X) const;

    /// boundary(S): vertices outside S adjacent to at least one member of S.
    /// Empty S yields an empty boundary.
    VertexSet boundary(const VertexSet& S) const;

    DegreeSequence degree_sequence() const;
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }

    bool is_connected() const;
    /// Sizes of connected components.
    std::vector<int> component_sizes() const;

    /// Edges in canonical order (u < v, sorted lexicographically).
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph() = default;
    int check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
        return v;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_;
};

/// Line graph: one vertex per edge of g, adjacency = shared endpoint.
/// Vertex i of the result is g.edges()[i]. Requires at least one edge.
Graph line_graph(const Graph& g);

}  // namespace oal
