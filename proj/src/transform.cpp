#include "berge/transform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace berge {

Graph shadow(const Hypergraph& h) {
    std::set<Edge> pairs;
    for (const auto& he : h.hyperedges())
        for (std::size_t i = 0; i < he.size(); ++i)
            for (std::size_t j = i + 1; j < he.size(); ++j)
                pairs.insert({he[i], he[j]});
    return Graph(h.vertex_count(), std::vector<Edge>(pairs.begin(), pairs.end()));
}

bool is_linear(const Hypergraph& h) {
    const auto& hes = h.hyperedges();
    for (std::size_t i = 0; i < hes.size(); ++i) {
        for (std::size_t j = i + 1; j < hes.size(); ++j) {
            int shared = 0;
            std::size_t a = 0, b = 0;
            while (a < hes[i].size() && b < hes[j].size()) {
                if (hes[i][a] == hes[j][b]) {
                    if (++shared > 1) return false;
                    ++a, ++b;
                } else if (hes[i][a] < hes[j][b]) {
                    ++a;
                } else {
                    ++b;
                }
            }
        }
    }
    return true;
}

BlowupResult blowup(const Hypergraph& h, const std::vector<int>& factors) {
    if (static_cast<int>(factors.size()) != h.vertex_count())
        throw std::invalid_argument("one blowup factor per vertex required");
    for (int f : factors)
        if (f <= 0) throw std::invalid_argument("blowup factor must be positive");

    std::vector<int> offset(h.vertex_count() + 1, 0);
    for (int v = 0; v < h.vertex_count(); ++v) offset[v + 1] = offset[v] + factors[v];
    const int new_n = offset[h.vertex_count()];

    BlowupResult result;
    result.vertex_origin.resize(new_n);
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int c = 0; c < factors[v]; ++c) result.vertex_origin[offset[v] + c] = v;

    // Copy sets are consecutive and ordered by source vertex, so the image of
    // a sorted hyperedge list stays sorted and the origin map is the identity
    // on indices.
    std::vector<std::vector<int>> new_edges;
    new_edges.reserve(h.hyperedge_count());
    for (const auto& he : h.hyperedges()) {
        std::vector<int> blown;
        for (int v : he)
            for (int c = 0; c < factors[v]; ++c) blown.push_back(offset[v] + c);
        new_edges.push_back(std::move(blown));
    }
    result.hyperedge_origin.resize(new_edges.size());
    for (std::size_t i = 0; i < new_edges.size(); ++i) result.hyperedge_origin[i] = static_cast<int>(i);

    std::optional<int> uniform;
    if (!new_edges.empty()) {
        const std::size_t r = new_edges.front().size();
        if (std::all_of(new_edges.begin(), new_edges.end(),
                        [r](const auto& e) { return e.size() == r; }))
            uniform = static_cast<int>(r);
    }
    result.hypergraph = Hypergraph(new_n, std::move(new_edges), uniform);
    return result;
}

Graph contract(const Graph& g, const VertexPartition& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not match the graph's vertex set");
    std::set<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const int bu = p.block_of(u), bv = p.block_of(v);
        if (bu != bv) edges.insert(make_edge(bu, bv));
    }
    return Graph(p.block_count(), std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace berge
