#pragma once

#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/partition.hpp"

namespace berge {

/// 2-shadow: graph on the same vertices whose edges are all pairs lying
/// together in some hyperedge.
Graph shadow(const Hypergraph& h);

/// True iff every two distinct hyperedges share at most one vertex.
bool is_linear(const Hypergraph& h);

struct BlowupResult {
    Hypergraph hypergraph;
    /// vertex_origin[w] = source vertex the new vertex w originates from.
    std::vector<int> vertex_origin;
    /// hyperedge_origin[i] = index of the source hyperedge of new hyperedge i.
    std::vector<int> hyperedge_origin;
};

/// Replace vertex u by factors[u] fresh vertices and each hyperedge by the
/// union of its vertices' copy sets. Copies of vertex u are the consecutive
/// labels following the copies of u-1. The result is tagged r-uniform when
/// every blown-up hyperedge ends up with exactly r vertices. Factors must be
/// >= 1 for every vertex.
BlowupResult blowup(const Hypergraph& h, const std::vector<int>& factors);

/// Merge each block of p to a single vertex (blocks ordered by smallest
/// element); distinct blocks become adjacent iff some edge of g crosses
/// them. Intra-block edges vanish.
Graph contract(const Graph& g, const VertexPartition& p);

}  // namespace berge
