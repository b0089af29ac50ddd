#pragma once

#include <optional>
#include <vector>

namespace berge {

/// Hypergraph on labeled vertices 0..n-1 with set semantics: hyperedges are
/// duplicate-free vertex sets of size >= 2, kept in canonical order (each
/// hyperedge sorted ascending, the list sorted lexicographically).
///
/// A hypergraph may carry an r-uniformity tag; the tag is validated against
/// every hyperedge at construction. Values are immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> hyperedges,
               std::optional<int> uniform = std::nullopt);

    int vertex_count() const { return n_; }
    int hyperedge_count() const { return static_cast<int>(hyperedges_.size()); }
    const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
    const std::vector<int>& hyperedge(int i) const { return hyperedges_[i]; }
    std::optional<int> uniform() const { return uniform_; }

    /// Indices of hyperedges containing v, ascending.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    bool hyperedge_contains(int i, int v) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && hyperedges_ == other.hyperedges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> hyperedges_;
    std::optional<int> uniform_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace berge
