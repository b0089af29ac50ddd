// Brute-force reference implementations for the test suites. Everything here
// is deliberately independent of the library's search kernels: plain loops
// over injective maps, assignments, and subsets.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace naive {

// Tries every injective psi : V(F) -> V(H) and every injective phi from
// F-edges to hyperedges, with early abandonment once a partial phi breaks
// containment.
inline bool contains_berge(const berge::Hypergraph& host, const berge::Graph& pattern) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    const int m = pattern.edge_count();
    const int he = host.hyperedge_count();
    if (k > n || m > he) return false;

    std::vector<int> psi(k, -1);
    std::vector<char> vertex_used(n, 0);
    std::vector<char> edge_used(he, 0);

    auto phi_dfs = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        const auto& [u, v] = pattern.edges()[i];
        for (int h = 0; h < he; ++h) {
            if (edge_used[h]) continue;
            if (!host.hyperedge_contains(h, psi[u])) continue;
            if (!host.hyperedge_contains(h, psi[v])) continue;
            edge_used[h] = 1;
            if (self(self, i + 1)) return true;
            edge_used[h] = 0;
        }
        return false;
    };
    auto psi_dfs = [&](auto&& self, int v) -> bool {
        if (v == k) return phi_dfs(phi_dfs, 0);
        for (int hv = 0; hv < n; ++hv) {
            if (vertex_used[hv]) continue;
            psi[v] = hv;
            vertex_used[hv] = 1;
            if (self(self, v + 1)) return true;
            vertex_used[hv] = 0;
            psi[v] = -1;
        }
        return false;
    };
    return psi_dfs(psi_dfs, 0);
}

inline bool contains_subgraph(const berge::Graph& host, const berge::Graph& pattern) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return false;
    std::vector<int> psi(k, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == k) return true;
        for (int hv = 0; hv < n; ++hv) {
            if (used[hv]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (pattern.adjacent(u, v) && !host.adjacent(psi[u], hv)) ok = false;
            if (!ok) continue;
            psi[v] = hv;
            used[hv] = 1;
            if (self(self, v + 1)) return true;
            used[hv] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

inline std::uint64_t count_labeled_embeddings(const berge::Graph& host,
                                              const berge::Graph& pattern) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return 0;
    std::vector<int> psi(k, -1);
    std::vector<char> used(n, 0);
    std::uint64_t count = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == k) {
            ++count;
            return;
        }
        for (int hv = 0; hv < n; ++hv) {
            if (used[hv]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (pattern.adjacent(u, v) && !host.adjacent(psi[u], hv)) ok = false;
            if (!ok) continue;
            psi[v] = hv;
            used[hv] = 1;
            self(self, v + 1);
            used[hv] = 0;
        }
    };
    dfs(dfs, 0);
    return count;
}

inline std::uint64_t automorphism_count(const berge::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline int chromatic_number(const berge::Graph& g) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, 0);
        while (true) {
            bool proper = true;
            for (const auto& [u, v] : g.edges())
                if (color[u] == color[v]) {
                    proper = false;
                    break;
                }
            if (proper) break;
            int i = 0;
            while (i < n && color[i] == k - 1) color[i++] = 0;
            if (i == n) {
                proper = false;
                color.clear();
                break;
            }
            ++color[i];
        }
        if (!color.empty()) return k;
    }
    return n;
}

inline std::vector<std::vector<int>> r_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == r) {
            out.push_back(pick);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Exhaustive maxima over every subset of candidate hyperedges/edges. Only
// usable when the candidate count is tiny.
inline long long berge_turan(int n, int r, const berge::Graph& pattern) {
    const auto candidates = r_subsets(n, r);
    const int total = static_cast<int>(candidates.size());
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<std::vector<int>> picked;
        for (int i = 0; i < total; ++i)
            if (mask >> i & 1) picked.push_back(candidates[i]);
        const long long size = static_cast<long long>(picked.size());
        if (size <= best) continue;
        if (!naive::contains_berge(berge::Hypergraph(n, picked, r), pattern)) best = size;
    }
    return best;
}

inline long long turan(int n, const berge::Graph& pattern) {
    std::vector<berge::Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
    const int total = static_cast<int>(candidates.size());
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<berge::Edge> picked;
        for (int i = 0; i < total; ++i)
            if (mask >> i & 1) picked.push_back(candidates[i]);
        const long long size = static_cast<long long>(picked.size());
        if (size <= best) continue;
        if (!naive::contains_subgraph(berge::Graph(n, picked), pattern)) best = size;
    }
    return best;
}

inline long long count_cliques(const berge::Graph& g, int r) {
    long long count = 0;
    for (const auto& subset : r_subsets(g.vertex_count(), r)) {
        bool clique = true;
        for (std::size_t a = 0; a < subset.size() && clique; ++a)
            for (std::size_t b = a + 1; b < subset.size() && clique; ++b)
                if (!g.adjacent(subset[a], subset[b])) clique = false;
        if (clique) ++count;
    }
    return count;
}

inline long long generalized_turan(int n, int r, const berge::Graph& pattern) {
    std::vector<berge::Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
    const int total = static_cast<int>(candidates.size());
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<berge::Edge> picked;
        for (int i = 0; i < total; ++i)
            if (mask >> i & 1) picked.push_back(candidates[i]);
        const berge::Graph g(n, picked);
        if (naive::contains_subgraph(g, pattern)) continue;
        best = std::max(best, count_cliques(g, r));
    }
    return best;
}

// Smallest n <= n_max forcing a red g1 or blue g2, by checking every one of
// the 2^C(n,2) colorings; -1 when a witness survives at n_max.
inline int ramsey(const berge::Graph& g1, const berge::Graph& g2, int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        std::vector<berge::Edge> board;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) board.push_back({u, v});
        const int m = static_cast<int>(board.size());
        bool witness = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m) && !witness; ++mask) {
            std::vector<berge::Edge> red, blue;
            for (int i = 0; i < m; ++i) (mask >> i & 1 ? red : blue).push_back(board[i]);
            if (!naive::contains_subgraph(berge::Graph(n, red), g1) &&
                !naive::contains_subgraph(berge::Graph(n, blue), g2))
                witness = true;
        }
        if (!witness) return n;
    }
    return -1;
}

// Every set partition of 0..n-1 (restricted-growth enumeration, no pruning).
inline std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int v, int blocks) -> void {
        if (v == n) {
            std::vector<std::vector<int>> partition(blocks);
            for (int i = 0; i < n; ++i) partition[assign[i]].push_back(i);
            out.push_back(std::move(partition));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            assign[v] = b;
            self(self, v + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Deterministic random hosts for the agreement corpora.
inline berge::Hypergraph random_hypergraph(std::mt19937& rng, int max_n, int max_edges) {
    std::uniform_int_distribution<int> n_dist(3, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> count_dist(0, max_edges);
    std::uniform_int_distribution<int> size_dist(2, std::min(n, 5));
    const int want = count_dist(rng);
    std::vector<std::vector<int>> edges;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int attempt = 0; attempt < 4 * want + 8 && static_cast<int>(edges.size()) < want;
         ++attempt) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> he(pool.begin(), pool.begin() + size_dist(rng));
        std::sort(he.begin(), he.end());
        if (std::find(edges.begin(), edges.end(), he) == edges.end()) edges.push_back(he);
    }
    return berge::Hypergraph(n, std::move(edges));
}

inline berge::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<berge::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.push_back({u, v});
    return berge::Graph(n, std::move(edges));
}

}  // namespace naive
