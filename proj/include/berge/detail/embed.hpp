#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "berge/bitset.hpp"
#include "berge/graph.hpp"

namespace berge::detail {

enum class VisitStatus { complete, stopped, node_limit };

// Backtracking enumeration of injective maps psi : V(pattern) -> V(host)
// that send every pattern edge to a host edge.
//
// Unassigned pattern vertices are processed in degree-descending order with
// ties broken by ascending label; host candidates are tried in ascending
// label order. Entries of psi that are >= 0 on entry are treated as fixed
// preassignments (used for anchored existence checks and parallel splits);
// psi is restored to its entry state before returning.
//
// visit(psi) returns false to stop the enumeration. nodes counts candidate
// assignments; when node_limit > 0 and the count would exceed it, the walk
// aborts with VisitStatus::node_limit.
template <class Visit>
VisitStatus visit_embeddings(const Graph& pattern, const BitAdjacency& host,
                             const std::vector<int>& host_degree,
                             std::vector<int>& psi, Visit&& visit,
                             std::uint64_t* nodes = nullptr,
                             std::uint64_t node_limit = 0) {
    const int k = pattern.vertex_count();
    const int hn = host.size();
    const int words = host.words();

    std::vector<int> order;
    for (int v = 0; v < k; ++v)
        if (psi[v] < 0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });

    std::vector<std::uint64_t> used((hn + 63) / 64, 0);
    // Preassignments must already be injective, adjacency-consistent, and
    // degree-feasible; otherwise there is nothing to enumerate.
    for (int v = 0; v < k; ++v) {
        if (psi[v] < 0) continue;
        if (psi[v] >= hn) return VisitStatus::complete;
        if (used[psi[v] >> 6] & (std::uint64_t{1} << (psi[v] & 63))) return VisitStatus::complete;
        used[psi[v] >> 6] |= std::uint64_t{1} << (psi[v] & 63);
        if (host_degree[psi[v]] < pattern.degree(v)) return VisitStatus::complete;
        for (int u : pattern.neighbors(v))
            if (psi[u] >= 0 && u < v && !host.test(psi[v], psi[u])) return VisitStatus::complete;
    }

    // assigned_neighbors[i] = pattern neighbors of order[i] already mapped
    // when position i is reached (preassigned or earlier in the order).
    std::vector<std::vector<int>> assigned_neighbors(order.size());
    {
        std::vector<int> position(k, k);  // preassigned vertices sort first
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int u : pattern.neighbors(order[i]))
                if (psi[u] >= 0 || position[u] < static_cast<int>(i))
                    assigned_neighbors[i].push_back(u);
    }

    VisitStatus status = VisitStatus::complete;
    std::vector<std::uint64_t> cand(words);
    std::vector<int> cand_list;

    auto dfs = [&](auto&& self, std::size_t pos) -> bool {  // false = stop walking
        if (pos == order.size()) return visit(static_cast<const std::vector<int>&>(psi));
        const int pv = order[pos];
        const int pdeg = pattern.degree(pv);

        for (int w = 0; w < words; ++w) cand[w] = ~used[w];
        if (hn & 63) cand[words - 1] &= (std::uint64_t{1} << (hn & 63)) - 1;
        for (int u : assigned_neighbors[pos]) {
            const std::uint64_t* row = host.row(psi[u]);
            for (int w = 0; w < words; ++w) cand[w] &= row[w];
        }
        cand_list.clear();
        for_each_bit(cand.data(), words, [&](int hv) {
            if (host_degree[hv] >= pdeg) cand_list.push_back(hv);
        });

        // cand/cand_list are shared scratch; copy this level's list before recursing.
        const std::vector<int> local(cand_list);
        for (int hv : local) {
            if (nodes) {
                ++*nodes;
                if (node_limit && *nodes > node_limit) {
                    status = VisitStatus::node_limit;
                    return false;
                }
            }
            psi[pv] = hv;
            used[hv >> 6] |= std::uint64_t{1} << (hv & 63);
            const bool keep_going = self(self, pos + 1);
            used[hv >> 6] &= ~(std::uint64_t{1} << (hv & 63));
            psi[pv] = -1;
            if (!keep_going) {
                if (status == VisitStatus::complete) status = VisitStatus::stopped;
                return false;
            }
        }
        return true;
    };

    if (!dfs(dfs, 0)) return status;
    return VisitStatus::complete;
}

}  // namespace berge::detail
