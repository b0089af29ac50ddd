#pragma once

#include <cstdint>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Exact chromatic number. Brackets with a greedy clique lower bound and a
/// greedy coloring upper bound, then decides k-colorability by backtracking
/// for ascending k.
int chromatic_number(const Graph& g);

/// Exact clique number via branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);

/// Same vertex set, edge removed. Throws if the edge is absent.
Graph delete_edge(const Graph& g, Edge e);

struct RamseyOptions {
    int n_max = 8;
    /// Total assignment budget across all board sizes; 0 = unlimited.
    std::uint64_t node_budget = 20'000'000;
};

struct RamseyLevel {
    int n = 0;
    bool witness_found = false;
    std::uint64_t nodes = 0;              // edge-color assignments explored
    std::uint64_t colorings_checked = 0;  // complete colorings reached
};

struct RamseyResult {
    enum class Status { found, greater_than_n_max, node_limit };
    Status status = Status::greater_than_n_max;
    int value = 0;  // valid when status == found
    std::vector<RamseyLevel> levels;
};

/// Smallest n <= n_max such that every red/blue coloring of E(K_n) contains
/// g1 in red or g2 in blue, decided by exhaustive coloring search. A complete
/// coloring avoiding both is a witness that n is still too small. Colorings
/// are canonicalized at the top level only: the colors on the first vertex's
/// star may be assumed monotone, which any relabeling of the other vertices
/// can arrange. Both graphs need at least one edge.
RamseyResult ramsey_number(const Graph& g1, const Graph& g2,
                           const RamseyOptions& options = {});

}  // namespace berge
