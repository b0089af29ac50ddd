#include "berge/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "berge/patterns.hpp"
#include "berge/subgraph.hpp"
#include "berge/transform.hpp"

namespace berge {

std::vector<VertexPartition> enumerate_admissible_partitions(const Graph& pattern, int t) {
    const int n = pattern.vertex_count();
    if (t < 1 || t > n - 1) throw std::invalid_argument("block-size cap out of range");

    std::vector<VertexPartition> out;
    std::vector<std::vector<int>> blocks;
    // cross[a][b] = pattern edges between blocks a and b among assigned vertices.
    std::vector<std::vector<int>> cross;

    auto neighbors_in_block = [&](int v, const std::vector<int>& block) {
        int count = 0;
        for (int u : block)
            if (pattern.adjacent(u, v)) ++count;
        return count;
    };

    auto assign = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.emplace_back(n, blocks);
            return;
        }
        const int k = static_cast<int>(blocks.size());
        std::vector<int> degree_in(k);
        int forced = -1;
        bool impossible = false;
        for (int b = 0; b < k; ++b) {
            degree_in[b] = neighbors_in_block(v, blocks[b]);
            if (degree_in[b] >= 2) {
                // Two co-blocked neighbors force v into their block.
                if (forced != -1) impossible = true;
                forced = b;
            }
        }
        if (impossible) return;
        for (int b = 0; b <= k; ++b) {
            if (forced != -1 && b != forced) continue;
            if (b < k && static_cast<int>(blocks[b].size()) >= t) continue;
            // Adding v to block b raises the cross count to every other
            // block by v's neighbor count there; each must stay <= 1.
            bool ok = true;
            for (int other = 0; other < k && ok; ++other) {
                if (other == b) continue;
                const int current = b < k ? cross[std::max(b, other)][std::min(b, other)] : 0;
                if (current + degree_in[other] > 1) ok = false;
            }
            if (!ok) continue;
            if (b == k) {
                blocks.push_back({v});
                cross.push_back(std::vector<int>(k, 0));
                for (int other = 0; other < k; ++other) cross[k][other] = degree_in[other];
                self(self, v + 1);
                blocks.pop_back();
                cross.pop_back();
            } else {
                blocks[b].push_back(v);
                for (int other = 0; other < k; ++other)
                    if (other != b) cross[std::max(b, other)][std::min(b, other)] += degree_in[other];
                self(self, v + 1);
                for (int other = 0; other < k; ++other)
                    if (other != b) cross[std::max(b, other)][std::min(b, other)] -= degree_in[other];
                blocks[b].pop_back();
            }
        }
    };
    assign(assign, 0);
    return out;
}

int min_contracted_chromatic(const Graph& pattern, int t) {
    int best = std::numeric_limits<int>::max();
    for (const auto& p : enumerate_admissible_partitions(pattern, t))
        best = std::min(best, chromatic_number(contract(pattern, p)));
    return best;
}

int linear_threshold(const Graph& pattern) {
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("linear threshold needs a pattern with an edge");
    return chromatic_number(pattern);
}

ThresholdReport threshold_report(const Graph& pattern, const ReportOptions& options) {
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("threshold report needs a pattern with an edge");

    ThresholdReport report;
    report.pattern = pattern;
    report.chi = chromatic_number(pattern);
    report.omega = clique_number(pattern);

    for (int t = 1; t <= pattern.vertex_count() - 1; ++t) {
        PartitionRow row;
        row.t = t;
        const auto partitions = enumerate_admissible_partitions(pattern, t);
        row.admissible_partitions = static_cast<long long>(partitions.size());
        int c = std::numeric_limits<int>::max();
        for (const auto& p : partitions)
            c = std::min(c, chromatic_number(contract(pattern, p)));
        row.min_contracted_chi = c;
        if (c >= 3) row.bound = (c - 1) * t + 1;
        report.rows.push_back(row);
    }

    report.chi_bound = {report.chi, "chromatic(chi)"};
    report.omega_bound = {(report.omega - 1) * (report.omega - 1) + 1, "clique((omega-1)^2+1)"};

    if (pattern.edge_count() >= 2) {
        int best = std::numeric_limits<int>::max();
        for (const Edge& e : edge_orbit_representatives(pattern)) {
            RamseyEntry entry;
            entry.edge = e;
            entry.result = ramsey_number(pattern, delete_edge(pattern, e), options.ramsey);
            if (entry.result.status == RamseyResult::Status::found)
                best = std::min(best, entry.result.value);
            report.ramsey_entries.push_back(std::move(entry));
        }
        if (best != std::numeric_limits<int>::max())
            report.ramsey_upper = BoundValue{best, "ramsey(min R(F, F minus e))"};
    }
    if (report.chi <= 2)
        report.bipartite_upper = BoundValue{pattern.vertex_count(), "bipartite(|V|)"};

    // Largest lower bound; ties prefer the clique bound, then the partition
    // rows in ascending t, then the chromatic bound.
    std::vector<BoundValue> lower_candidates{report.omega_bound};
    for (const auto& row : report.rows)
        if (row.bound)
            lower_candidates.push_back(
                {*row.bound, "contraction((c-1)t+1, t=" + std::to_string(row.t) +
                                 ", c=" + std::to_string(row.min_contracted_chi) + ")"});
    lower_candidates.push_back(report.chi_bound);
    report.final_lower = lower_candidates.front();
    for (const auto& cand : lower_candidates)
        if (cand.value > report.final_lower.value) report.final_lower = cand;

    std::vector<BoundValue> upper_candidates;
    if (report.ramsey_upper) upper_candidates.push_back(*report.ramsey_upper);
    if (report.bipartite_upper) upper_candidates.push_back(*report.bipartite_upper);
    for (const auto& cand : upper_candidates)
        if (!report.final_upper || cand.value < report.final_upper->value)
            report.final_upper = cand;

    return report;
}

Graph blowup_graph(const Graph& g, const std::vector<int>& factors) {
    if (static_cast<int>(factors.size()) != g.vertex_count())
        throw std::invalid_argument("one blowup factor per vertex required");
    for (int f : factors)
        if (f <= 0) throw std::invalid_argument("blowup factor must be positive");
    std::vector<int> offset(g.vertex_count() + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + factors[v];
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        for (int a = 0; a < factors[u]; ++a)
            for (int b = 0; b < factors[v]; ++b)
                edges.push_back(make_edge(offset[u] + a, offset[v] + b));
    return Graph(offset[g.vertex_count()], std::move(edges));
}

long long corollary_clique_blowup_bound(int s, const std::vector<int>& factors) {
    if (s < 3) throw std::invalid_argument("clique blowup bound needs s >= 3");
    if (static_cast<int>(factors.size()) != s)
        throw std::invalid_argument("need one factor per clique vertex");
    const Graph blown = blowup_graph(complete_graph(s), factors);
    const int t = blown.vertex_count() - 1;
    // The corollary's structural claim: singletons are the only admissible
    // partition, so the contracted chromatic minimum is exactly s.
    if (enumerate_admissible_partitions(blown, t).size() != 1)
        throw std::runtime_error("partition machinery found a non-singleton admissible partition");
    const int c = min_contracted_chromatic(blown, t);
    if (c != s) throw std::runtime_error("contracted chromatic minimum is not the clique order");
    return static_cast<long long>(c - 1) * t + 1;
}

long long corollary_connected_blowup_bound(const Graph& g, const std::vector<int>& factors) {
    if (static_cast<int>(factors.size()) != g.vertex_count())
        throw std::invalid_argument("need one factor per vertex");
    for (int i = 0; i < g.vertex_count(); ++i)
        if (factors[i] < i + 1 || factors[0] < 2)
            throw std::invalid_argument("factors must satisfy w(i) >= i and w(1) >= 2");
    // Connectivity of g.
    if (g.vertex_count() > 0) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("graph must be connected");
    }
    const Graph blown = blowup_graph(g, factors);
    const int t = blown.vertex_count() - 1;
    // Every admissible contraction keeps a copy of g, so the contracted
    // chromatic minimum equals chi(blowup) exactly; the singleton partition
    // attains it.
    const int c = min_contracted_chromatic(blown, t);
    if (c != chromatic_number(blown))
        throw std::runtime_error("contracted chromatic minimum differs from the blowup's");
    return static_cast<long long>(c - 1) * t + 1;
}

}  // namespace berge
