#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Witness that a hypergraph contains a Berge copy of a pattern: an
/// injective vertex map psi together with an injective assignment phi of
/// pattern edges to hyperedges such that each hyperedge contains the image
/// of its edge's endpoints.
struct BergeCertificate {
    /// psi[pattern vertex] = host vertex.
    std::vector<int> psi;
    /// phi[i] = hyperedge index assigned to pattern.edges()[i].
    std::vector<int> phi;
};

struct DetectOptions {
    /// 0 = unlimited. Counts embedding-search assignments.
    std::uint64_t node_limit = 0;
    /// Workers for the top-level candidate split. The reported certificate
    /// is identical at any thread count.
    int threads = 1;
    /// When set, only certificates whose phi uses this hyperedge index are
    /// accepted. Lets incremental searches test just-added hyperedges.
    std::optional<int> require_hyperedge;
};

struct DetectResult {
    enum class Status { found, free, node_limit };
    Status status = Status::free;
    std::optional<BergeCertificate> certificate;
    std::uint64_t nodes = 0;
};

/// Decides Berge-pattern containment and produces a certificate when one
/// exists. Two phases: injective embeddings of the pattern into the 2-shadow
/// are enumerated in a fixed order (pattern vertices by descending degree,
/// host candidates ascending), and each embedding is completed by a system
/// of distinct representatives found via augmenting paths. The first
/// certificate in this order is returned. Patterns without edges are
/// rejected.
DetectResult contains_berge(const Hypergraph& host, const Graph& pattern,
                            const DetectOptions& options = {});

/// Re-checks a certificate against the definition: injectivity of both maps
/// and containment of every edge's image pair. Malformed input yields false.
bool verify_certificate(const Hypergraph& host, const Graph& pattern,
                        const BergeCertificate& certificate);

struct CountResult {
    enum class Status { ok, node_limit };
    Status status = Status::ok;
    /// Unlabeled copies: labeled embeddings divided by |Aut(pattern)|.
    std::uint64_t value = 0;
    std::uint64_t nodes = 0;
};

/// Number of subgraphs of shadow(host) isomorphic to pattern.
CountResult count_shadow_copies(const Hypergraph& host, const Graph& pattern,
                                const DetectOptions& options = {});

}  // namespace berge
