#include "berge/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "berge/bitset.hpp"
#include "berge/detail/embed.hpp"

namespace berge {

namespace {

std::vector<int> by_degree_descending(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

int greedy_clique(const Graph& g) {
    std::vector<int> candidates(g.vertex_count());
    std::iota(candidates.begin(), candidates.end(), 0);
    int size = 0;
    while (!candidates.empty()) {
        int best = candidates.front();
        for (int v : candidates)
            if (g.degree(v) > g.degree(best)) best = v;
        ++size;
        std::vector<int> next;
        for (int v : candidates)
            if (v != best && g.adjacent(v, best)) next.push_back(v);
        candidates = std::move(next);
    }
    return size;
}

int greedy_coloring(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    int used = 0;
    for (int v : by_degree_descending(g)) {
        std::vector<char> taken(used + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) taken[color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

bool k_colorable(const Graph& g, int k, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    // Standard symmetry break: a vertex may open at most one new color.
    auto dfs = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        const int v = order[pos];
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("chromatic number needs a vertex");
    if (g.edge_count() == 0) return 1;
    const auto order = by_degree_descending(g);
    const int upper = greedy_coloring(g);
    for (int k = std::max(2, greedy_clique(g)); k < upper; ++k)
        if (k_colorable(g, k, order)) return k;
    return upper;
}

int clique_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("clique number needs a vertex");
    if (g.edge_count() == 0) return 1;

    const BitAdjacency adj = BitAdjacency::from_graph(g);
    int best = 1;

    // Branch and bound with a greedy-coloring bound on the candidate set
    // (candidates reordered by color class; a clique uses each color once).
    auto expand = [&](auto&& self, std::vector<int>& candidates, int depth) -> void {
        std::vector<int> color(candidates.size());
        std::vector<int> reordered;
        reordered.reserve(candidates.size());
        {
            std::vector<std::vector<int>> classes;
            for (int v : candidates) {
                std::size_t c = 0;
                for (; c < classes.size(); ++c) {
                    bool clash = false;
                    for (int u : classes[c])
                        if (adj.test(u, v)) {
                            clash = true;
                            break;
                        }
                    if (!clash) break;
                }
                if (c == classes.size()) classes.push_back({});
                classes[c].push_back(v);
            }
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int v : classes[c]) {
                    color[reordered.size()] = static_cast<int>(c) + 1;
                    reordered.push_back(v);
                }
        }
        for (int i = static_cast<int>(reordered.size()) - 1; i >= 0; --i) {
            if (depth + color[i] <= best) return;
            const int v = reordered[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj.test(reordered[j], v)) next.push_back(reordered[j]);
            best = std::max(best, depth + 1);
            if (!next.empty()) self(self, next, depth + 1);
        }
    };

    std::vector<int> all = by_degree_descending(g);
    expand(expand, all, 0);
    return best;
}

Graph delete_edge(const Graph& g, Edge e) {
    const Edge needle = make_edge(e.first, e.second);
    std::vector<Edge> edges = g.edges();
    const auto it = std::find(edges.begin(), edges.end(), needle);
    if (it == edges.end()) throw std::invalid_argument("edge to delete is absent");
    edges.erase(it);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

// One board size of the Ramsey search. Returns 1 if an avoiding coloring
// exists, 0 if none, -1 on budget exhaustion.
int avoiding_coloring_exists(const Graph& g1, const Graph& g2, int n,
                             std::uint64_t budget, RamseyLevel& level) {
    std::vector<Edge> board;
    for (int v = 1; v < n; ++v) board.push_back({0, v});  // the monotone star
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) board.push_back({u, v});

    BitAdjacency red(n), blue(n);
    std::vector<int> red_degree(n, 0), blue_degree(n, 0);

    // Anchored containment: the pattern must cover the edge just colored.
    auto creates_copy = [&](const Graph& pattern, const BitAdjacency& adj,
                            const std::vector<int>& degree, Edge host_edge) {
        if (pattern.vertex_count() > n) return false;
        bool found = false;
        std::vector<int> psi(pattern.vertex_count(), -1);
        for (const auto& [u, v] : pattern.edges()) {
            for (int flip = 0; flip < 2 && !found; ++flip) {
                std::fill(psi.begin(), psi.end(), -1);
                psi[u] = flip ? host_edge.second : host_edge.first;
                psi[v] = flip ? host_edge.first : host_edge.second;
                detail::visit_embeddings(pattern, adj, degree, psi,
                                         [&](const std::vector<int>&) {
                                             found = true;
                                             return false;
                                         });
            }
            if (found) break;
        }
        return found;
    };

    int outcome = 0;
    auto dfs = [&](auto&& self, std::size_t idx, bool star_blue) -> bool {
        if (idx == board.size()) {
            ++level.colorings_checked;
            return true;  // complete avoiding coloring: witness
        }
        const auto [u, v] = board[idx];
        const bool star = idx < static_cast<std::size_t>(n - 1);
        for (int c = 0; c < 2; ++c) {
            if (c == 0 && star && star_blue) continue;  // star colors stay monotone
            ++level.nodes;
            if (budget && level.nodes > budget) {
                outcome = -1;
                return false;
            }
            auto& adj = c == 0 ? red : blue;
            auto& deg = c == 0 ? red_degree : blue_degree;
            adj.set(u, v);
            ++deg[u], ++deg[v];
            const bool hit = creates_copy(c == 0 ? g1 : g2, adj, deg, {u, v});
            if (!hit && self(self, idx + 1, star ? (star_blue || c == 1) : star_blue))
                return true;
            adj.clear(u, v);
            --deg[u], --deg[v];
            if (outcome == -1) return false;
        }
        return false;
    };

    if (dfs(dfs, 0, false)) return 1;
    return outcome;
}

}  // namespace

RamseyResult ramsey_number(const Graph& g1, const Graph& g2, const RamseyOptions& options) {
    if (g1.edge_count() == 0 || g2.edge_count() == 0)
        throw std::invalid_argument("Ramsey arguments need at least one edge");
    RamseyResult result;
    std::uint64_t spent = 0;
    for (int n = 2; n <= options.n_max; ++n) {
        RamseyLevel level;
        level.n = n;
        const std::uint64_t remaining =
            options.node_budget ? (options.node_budget > spent ? options.node_budget - spent : 1)
                                : 0;
        const int outcome = avoiding_coloring_exists(g1, g2, n, remaining, level);
        spent += level.nodes;
        level.witness_found = outcome == 1;
        result.levels.push_back(level);
        if (outcome == -1) {
            result.status = RamseyResult::Status::node_limit;
            return result;
        }
        if (outcome == 0) {
            result.status = RamseyResult::Status::found;
            result.value = n;
            return result;
        }
    }
    result.status = RamseyResult::Status::greater_than_n_max;
    return result;
}

}  // namespace berge
