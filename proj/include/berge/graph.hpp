#pragma once

#include <utility>
#include <vector>

namespace berge {

/// Undirected edge, always stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Simple undirected graph on labeled vertices 0..n-1.
///
/// Immutable after construction. The edge list is kept canonical (each pair
/// sorted internally, pairs sorted lexicographically), so equal graphs
/// compare equal and serialize byte-identically. Self-loops and duplicate
/// edges are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace berge
