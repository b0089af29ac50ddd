#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/invariants.hpp"
#include "berge/partition.hpp"

namespace berge {

/// All partitions of V(pattern) into blocks of size at most t with at most
/// one pattern edge between any two blocks. Enumerated as restricted-growth
/// assignments with incremental cross-edge pruning and common-neighbor
/// forcing (two co-blocked vertices pull every common neighbor into their
/// block). Requires 1 <= t <= |V|-1.
std::vector<VertexPartition> enumerate_admissible_partitions(const Graph& pattern, int t);

/// Minimum chromatic number over the contractions of all t-admissible
/// partitions of pattern.
int min_contracted_chromatic(const Graph& pattern, int t);

/// A bound value together with the rule that produced it.
struct BoundValue {
    int value = 0;
    std::string source;
};

struct PartitionRow {
    int t = 0;
    long long admissible_partitions = 0;
    int min_contracted_chi = 0;
    /// (c-1)t+1 when the contracted chromatic minimum c is >= 3, else empty.
    std::optional<int> bound;
};

struct RamseyEntry {
    Edge edge;  // deleted edge (orbit representative)
    RamseyResult result;
};

/// Lower and upper bounds on the uniformity threshold of a pattern, with
/// full provenance: one row per block-size cap t, the clique and chromatic
/// lower bounds, the Ramsey upper bound minimized over edge orbits, and the
/// vertex-count upper bound for bipartite patterns.
struct ThresholdReport {
    Graph pattern;
    int chi = 0;
    int omega = 0;
    std::vector<PartitionRow> rows;
    BoundValue chi_bound;
    BoundValue omega_bound;
    std::optional<BoundValue> ramsey_upper;     // empty = unknown within budget
    std::optional<BoundValue> bipartite_upper;  // empty = pattern not bipartite
    BoundValue final_lower;
    std::optional<BoundValue> final_upper;  // empty = no upper bound resolved
    std::vector<RamseyEntry> ramsey_entries;
};

struct ReportOptions {
    RamseyOptions ramsey;
};

/// Pattern needs at least one edge; the Ramsey upper bound additionally
/// needs at least two (with fewer it is skipped).
ThresholdReport threshold_report(const Graph& pattern, const ReportOptions& options = {});

/// Least uniformity from which linear hosts force subquadratic extremal
/// counts; equals the chromatic number.
int linear_threshold(const Graph& pattern);

/// Usual graph blowup: vertex i becomes factors[i] pairwise nonadjacent
/// copies; copies of adjacent vertices are all adjacent.
Graph blowup_graph(const Graph& g, const std::vector<int>& factors);

/// Closed-form threshold lower bound (s-1)(|V(F)|-1)+1 for F a blowup of a
/// complete graph on s >= 3 vertices, cross-checked against the generic
/// partition machinery at t = |V(F)|-1. Throws if the machinery disagrees.
long long corollary_clique_blowup_bound(int s, const std::vector<int>& factors);

/// Closed-form threshold lower bound (chi(F)-1)(|V(F)|-1)+1 for F a large
/// enough blowup of a connected graph g (factors[i] >= i+1 and factors[0]
/// >= 2), cross-checked against the generic machinery. The bound is computed
/// for the blowup F itself.
long long corollary_connected_blowup_bound(const Graph& g, const std::vector<int>& factors);

}  // namespace berge
