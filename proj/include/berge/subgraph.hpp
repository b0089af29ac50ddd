#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// True iff host has a (not necessarily induced) subgraph isomorphic to
/// pattern.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// True iff host has a pattern copy with some pattern edge mapped onto
/// host_edge. Used for incremental freeness checks: when host was pattern
/// free before host_edge was added, this decides freeness of the extension.
bool contains_subgraph_using_edge(const Graph& host, const Graph& pattern, Edge host_edge);

/// Number of injective maps V(pattern) -> V(host) sending every pattern edge
/// to a host edge.
std::uint64_t count_labeled_embeddings(const Graph& host, const Graph& pattern);

/// Enumerates embeddings in the fixed deterministic order; visit returns
/// false to stop early. Returns false iff the visitor stopped.
bool visit_embeddings(const Graph& host, const Graph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit);

/// |Aut(g)|: permutations of V(g) mapping the edge set onto itself, counted
/// by brute force over all vertex permutations.
std::uint64_t automorphism_count(const Graph& g);

/// One representative per orbit of E(g) under Aut(g), each the smallest edge
/// of its orbit, listed in ascending order.
std::vector<Edge> edge_orbit_representatives(const Graph& g);

/// Isomorphism-invariant key for small graphs (lexicographically smallest
/// upper-triangle adjacency string over all relabelings); for large graphs
/// falls back to the labeled encoding, which is injective but not
/// isomorphism-invariant. Used for cache addressing.
std::string canonical_graph_key(const Graph& g);

}  // namespace berge
