#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Machine-checkable promises attached to a generated hypergraph: claimed
/// linearity, claimed uniformity, the closed-form hyperedge count, and named
/// patterns the hypergraph must contain no Berge copy of.
struct ConstructionClaims {
    bool linear = false;
    std::optional<int> uniform;
    std::optional<long long> count_formula;
    std::vector<std::string> free_of;
};

struct Construction {
    Hypergraph hypergraph;
    ConstructionClaims claims;
};

/// r classes of floor(n/r) vertices; hyperedges take the j-th vertex of
/// class 1 and step through the classes with a constant stride m:
/// {v(1,x), v(2,x+m), ..., v(r,x+(r-1)m)} for x in 1..floor(n/(2r)) and
/// m in 0..floor(n/(2r(r-1))). Linear, r-uniform, r-partite shadow, with
/// floor(n/(2r)) * (floor(n/(2r(r-1)))+1) hyperedges; leftover vertices are
/// isolated. Requires n >= 2r, r >= 2. For r = 2 the stride divisor is 1 and
/// m runs to floor(n/4).
Construction linear_construction(int n, int r);

/// Classwise blowup of the (s-1)-uniform linear construction with factors in
/// [1, s-1] summing to r, sized to at most n vertices (padded with isolated
/// vertices to exactly n). Contains no Berge copy of the complete graph on s
/// vertices. Requires 2 <= r <= (s-1)^2 and s >= 3; for r <= s-1 this falls
/// through to the r-uniform linear construction. Default factors are as
/// equal as possible, larger ones on lower-indexed classes.
Construction clique_blowup_construction(int n, int s, int r,
                                        std::optional<std::vector<int>> factors = std::nullopt);

/// Classwise blowup of the (c-1)-uniform linear construction with factors in
/// [1, t] summing to r. Contains no Berge copy of any pattern all of whose
/// t-admissible contractions have chromatic number >= c. Requires c >= 3 and
/// 2 <= r <= (c-1)t; for r < c this falls through to the r-uniform linear
/// construction.
Construction admissible_blowup_construction(int n, int c, int t, int r,
                                            std::optional<std::vector<int>> factors = std::nullopt);

/// All transversals (one vertex per part) of r parts of floor(n/r) vertices,
/// floor(n/r)^r hyperedges; the shadow is the complete r-partite graph.
/// Requires n >= r >= 2.
Construction rpartite_construction(int n, int r);

/// Point-line incidence graph of the projective plane of order q, for
/// q in {2, 3, 4, 5, 7}: (q^2+q+1) + (q^2+q+1) vertices (points first,
/// lines after), (q^2+q+1)(q+1) edges, bipartite, girth 6.
Graph projective_incidence_graph(int q);

/// Replaces every vertex of a bipartite C4-free base graph with i copies on
/// one side and j copies on the other, turning each base edge into an
/// (i+j)-vertex hyperedge. One hyperedge per base edge; no Berge-C4.
/// Verifies the base and requires 1 <= i, j <= 3.
Construction c4_free_construction(const Graph& base, int i, int j);

}  // namespace berge
