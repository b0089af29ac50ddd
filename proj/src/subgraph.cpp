#include "berge/subgraph.hpp"

#include <algorithm>
#include <numeric>

#include "berge/detail/embed.hpp"

namespace berge {

namespace {

std::vector<int> degrees_of(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    return d;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    const BitAdjacency adj = BitAdjacency::from_graph(host);
    const std::vector<int> hd = degrees_of(host);
    std::vector<int> psi(pattern.vertex_count(), -1);
    bool found = false;
    detail::visit_embeddings(pattern, adj, hd, psi, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

bool contains_subgraph_using_edge(const Graph& host, const Graph& pattern, Edge host_edge) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    const BitAdjacency adj = BitAdjacency::from_graph(host);
    const std::vector<int> hd = degrees_of(host);
    std::vector<int> psi(pattern.vertex_count(), -1);
    bool found = false;
    for (const auto& [u, v] : pattern.edges()) {
        for (int flip = 0; flip < 2 && !found; ++flip) {
            std::fill(psi.begin(), psi.end(), -1);
            psi[u] = flip ? host_edge.second : host_edge.first;
            psi[v] = flip ? host_edge.first : host_edge.second;
            detail::visit_embeddings(pattern, adj, hd, psi, [&](const std::vector<int>&) {
                found = true;
                return false;
            });
        }
        if (found) break;
    }
    return found;
}

std::uint64_t count_labeled_embeddings(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    const BitAdjacency adj = BitAdjacency::from_graph(host);
    const std::vector<int> hd = degrees_of(host);
    std::vector<int> psi(pattern.vertex_count(), -1);
    std::uint64_t count = 0;
    detail::visit_embeddings(pattern, adj, hd, psi, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

bool visit_embeddings(const Graph& host, const Graph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit) {
    if (pattern.vertex_count() > host.vertex_count()) return true;
    const BitAdjacency adj = BitAdjacency::from_graph(host);
    const std::vector<int> hd = degrees_of(host);
    std::vector<int> psi(pattern.vertex_count(), -1);
    return detail::visit_embeddings(pattern, adj, hd, psi, visit) != detail::VisitStatus::stopped;
}

namespace {

template <class Fn>
void for_each_automorphism(const Graph& g, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (g.degree(v) != g.degree(perm[v])) ok = false;
        for (const auto& [u, v] : g.edges()) {
            if (!ok) break;
            if (!g.adjacent(perm[u], perm[v])) ok = false;
        }
        // Degree- and edge-preserving bijections preserve the edge set exactly
        // (both sides have the same edge count).
        if (ok) fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
    std::uint64_t count = 0;
    for_each_automorphism(g, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<Edge> edge_orbit_representatives(const Graph& g) {
    const auto& edges = g.edges();
    const int m = g.edge_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto edge_index = [&](Edge e) {
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    for_each_automorphism(g, [&](const std::vector<int>& perm) {
        for (int i = 0; i < m; ++i) {
            const int j = edge_index(make_edge(perm[edges[i].first], perm[edges[i].second]));
            const int a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    });
    std::vector<Edge> reps;
    for (int i = 0; i < m; ++i)
        if (find(i) == i) reps.push_back(edges[i]);
    return reps;
}

std::string canonical_graph_key(const Graph& g) {
    const int n = g.vertex_count();
    auto encode = [&](const std::vector<int>& perm) {
        std::string s;
        s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
        return s;
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (n > 9) return "labeled:n=" + std::to_string(n) + ";" + encode(perm);
    std::string best = encode(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string s = encode(perm);
        if (s < best) best = std::move(s);
    }
    return "canonical:n=" + std::to_string(n) + ";" + best;
}

}  // namespace berge
