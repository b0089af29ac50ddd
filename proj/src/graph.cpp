#include "berge/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("self-loop rejected");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace berge
