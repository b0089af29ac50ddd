#include "berge/detect.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "berge/detail/embed.hpp"
#include "berge/subgraph.hpp"
#include "berge/transform.hpp"

namespace berge {

namespace {

// Hyperedge indices containing both endpoints of a host pair, ascending.
std::vector<int> cover_list(const Hypergraph& host, int a, int b) {
    const auto& ia = host.incident(a);
    const auto& ib = host.incident(b);
    std::vector<int> out;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(out));
    return out;
}

// Augmenting-path matching of pattern edges to hyperedges. covers[i] lists
// the admissible hyperedges of pattern edge i; owner maps hyperedge -> edge.
bool augment(const std::vector<std::vector<int>>& covers, int i,
             std::vector<char>& visited, std::vector<int>& owner,
             std::vector<int>& match) {
    for (int h : covers[i]) {
        if (visited[h]) continue;
        visited[h] = 1;
        if (owner[h] == -1 || augment(covers, owner[h], visited, owner, match)) {
            owner[h] = i;
            match[i] = h;
            return true;
        }
    }
    return false;
}

// Finds a system of distinct representatives for the embedded pattern edges,
// optionally forced to use a specific hyperedge. Edges are matched in index
// order with candidates ascending, so the result is deterministic.
std::optional<std::vector<int>> match_edges(const std::vector<std::vector<int>>& covers,
                                            int hyperedge_count,
                                            std::optional<int> required) {
    const int m = static_cast<int>(covers.size());
    auto run = [&](std::optional<int> forced_edge) -> std::optional<std::vector<int>> {
        std::vector<int> owner(hyperedge_count, -1);
        std::vector<int> match(m, -1);
        if (forced_edge) {
            owner[*required] = *forced_edge;
            match[*forced_edge] = *required;
        }
        for (int i = 0; i < m; ++i) {
            if (i == forced_edge) continue;
            std::vector<char> visited(hyperedge_count, 0);
            if (required) visited[*required] = 1;  // pinned; never rematched
            if (!augment(covers, i, visited, owner, match)) return std::nullopt;
        }
        return match;
    };
    if (!required) return run(std::nullopt);
    for (int i = 0; i < m; ++i) {
        if (!std::binary_search(covers[i].begin(), covers[i].end(), *required)) continue;
        if (auto match = run(i)) return match;
    }
    return std::nullopt;
}

struct EmbedSearch {
    const Hypergraph* host;
    const Graph* pattern;
    const BitAdjacency* shadow_adj;
    const std::vector<int>* shadow_degree;
    std::optional<int> require_hyperedge;

    // Runs the embedding walk with the given preassignment, stopping at the
    // first embedding that admits a matching.
    detail::VisitStatus run(std::vector<int> psi, std::uint64_t* nodes,
                            std::uint64_t node_limit,
                            std::optional<BergeCertificate>& out) const {
        const auto& pedges = pattern->edges();
        return detail::visit_embeddings(
            *pattern, *shadow_adj, *shadow_degree, psi,
            [&](const std::vector<int>& map) {
                std::vector<std::vector<int>> covers(pedges.size());
                for (std::size_t i = 0; i < pedges.size(); ++i) {
                    covers[i] = cover_list(*host, map[pedges[i].first], map[pedges[i].second]);
                    if (covers[i].empty()) return true;  // keep searching
                }
                auto match = match_edges(covers, host->hyperedge_count(), require_hyperedge);
                if (!match) return true;
                out = BergeCertificate{map, *match};
                return false;
            },
            nodes, node_limit);
    }
};

}  // namespace

DetectResult contains_berge(const Hypergraph& host, const Graph& pattern,
                            const DetectOptions& options) {
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("Berge containment needs a pattern with at least one edge");

    DetectResult result;
    if (pattern.edge_count() > host.hyperedge_count()) return result;
    if (pattern.vertex_count() > host.vertex_count()) return result;

    const Graph sh = shadow(host);
    const BitAdjacency adj = BitAdjacency::from_graph(sh);
    std::vector<int> degree(sh.vertex_count());
    for (int v = 0; v < sh.vertex_count(); ++v) degree[v] = sh.degree(v);

    EmbedSearch search{&host, &pattern, &adj, &degree, options.require_hyperedge};

    const int k = pattern.vertex_count();
    std::vector<int> psi(k, -1);

    if (options.threads > 1 && options.node_limit == 0) {
        // Split on the first vertex of the fixed order. Each branch is fully
        // searched and the smallest successful branch wins, matching the
        // serial first-certificate order.
        int first = 0;
        for (int v = 1; v < k; ++v)
            if (pattern.degree(v) > pattern.degree(first)) first = v;
        std::vector<int> candidates;
        for (int hv = 0; hv < sh.vertex_count(); ++hv)
            if (degree[hv] >= pattern.degree(first)) candidates.push_back(hv);
        const int groups = std::max(1, std::min<int>(options.threads, static_cast<int>(candidates.size())));
        std::vector<std::future<std::optional<BergeCertificate>>> futures;
        for (int gi = 0; gi < groups; ++gi) {
            futures.push_back(std::async(std::launch::async, [&, gi]() {
                std::optional<BergeCertificate> found;
                for (std::size_t ci = gi; ci < candidates.size(); ci += groups) {
                    std::vector<int> branch(k, -1);
                    branch[first] = candidates[ci];
                    std::optional<BergeCertificate> local;
                    search.run(branch, nullptr, 0, local);
                    if (local && (!found || local->psi[first] < found->psi[first])) found = local;
                }
                return found;
            }));
        }
        std::optional<BergeCertificate> best;
        for (auto& f : futures) {
            auto cert = f.get();
            if (cert && (!best || cert->psi[first] < best->psi[first])) best = cert;
        }
        if (best) {
            result.status = DetectResult::Status::found;
            result.certificate = std::move(best);
        }
        return result;
    }

    std::optional<BergeCertificate> found;
    const auto status = search.run(psi, &result.nodes, options.node_limit, found);
    if (found) {
        result.status = DetectResult::Status::found;
        result.certificate = std::move(found);
    } else if (status == detail::VisitStatus::node_limit) {
        result.status = DetectResult::Status::node_limit;
    }
    return result;
}

bool verify_certificate(const Hypergraph& host, const Graph& pattern,
                        const BergeCertificate& certificate) {
    const int k = pattern.vertex_count();
    const int m = pattern.edge_count();
    if (static_cast<int>(certificate.psi.size()) != k) return false;
    if (static_cast<int>(certificate.phi.size()) != m) return false;

    std::vector<char> host_vertex_used(host.vertex_count(), 0);
    for (int v = 0; v < k; ++v) {
        const int hv = certificate.psi[v];
        if (hv < 0 || hv >= host.vertex_count() || host_vertex_used[hv]) return false;
        host_vertex_used[hv] = 1;
    }
    std::vector<char> hyperedge_used(host.hyperedge_count(), 0);
    for (int i = 0; i < m; ++i) {
        const int h = certificate.phi[i];
        if (h < 0 || h >= host.hyperedge_count() || hyperedge_used[h]) return false;
        hyperedge_used[h] = 1;
        const auto& [u, v] = pattern.edges()[i];
        if (!host.hyperedge_contains(h, certificate.psi[u])) return false;
        if (!host.hyperedge_contains(h, certificate.psi[v])) return false;
    }
    return true;
}

CountResult count_shadow_copies(const Hypergraph& host, const Graph& pattern,
                                const DetectOptions& options) {
    CountResult result;
    const Graph sh = shadow(host);
    if (pattern.vertex_count() > sh.vertex_count()) return result;

    const BitAdjacency adj = BitAdjacency::from_graph(sh);
    std::vector<int> degree(sh.vertex_count());
    for (int v = 0; v < sh.vertex_count(); ++v) degree[v] = sh.degree(v);
    std::vector<int> psi(pattern.vertex_count(), -1);

    std::uint64_t embeddings = 0;
    const auto status = detail::visit_embeddings(
        pattern, adj, degree, psi,
        [&](const std::vector<int>&) {
            ++embeddings;
            return true;
        },
        &result.nodes, options.node_limit);
    if (status == detail::VisitStatus::node_limit) {
        result.status = CountResult::Status::node_limit;
        return result;
    }
    const std::uint64_t aut = automorphism_count(pattern);
    result.value = embeddings / aut;
    return result;
}

}  // namespace berge
