#include "berge/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "berge/bitset.hpp"
#include "berge/detail/embed.hpp"
#include "berge/detect.hpp"
#include "berge/json_io.hpp"
#include "berge/subgraph.hpp"

namespace berge {

using nlohmann::json;

std::string to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::hypergraph: return "hypergraph";
        case SearchMode::linear_hypergraph: return "linear-hypergraph";
        case SearchMode::graph: return "graph";
        case SearchMode::generalized: return "generalized";
    }
    return "?";
}

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::vector<std::vector<int>> r_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r > n || r < 1) return out;
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(pick);
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

void spend_node(std::uint64_t& nodes, std::uint64_t budget) {
    ++nodes;
    if (budget && nodes > budget)
        throw resource_limit_error("search node budget exhausted; raise the budget to proceed");
}

// Depth-first search over lexicographically increasing choices of candidate
// hyperedges. The first chosen candidate may be assumed to be candidate 0:
// relabeling vertices maps any family to one whose smallest hyperedge is
// {0..r-1}, which preserves both the extremal value and the lexicographically
// smallest witness.
SearchResult run_berge_search(int n, int r, const Graph& pattern, bool linear,
                              const SearchOptions& options) {
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("pattern needs at least one edge");
    SearchResult result;
    result.mode = linear ? SearchMode::linear_hypergraph : SearchMode::hypergraph;
    result.n = n;
    result.r = r;
    result.pattern = pattern;

    const auto candidates = r_subsets(n, r);
    const int total = static_cast<int>(candidates.size());
    std::vector<std::vector<int>> chosen;
    std::vector<int> chosen_index;
    long long best = 0;
    std::vector<int> best_witness;  // candidate indices

    auto shares_two = [](const std::vector<int>& a, const std::vector<int>& b) {
        int shared = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                if (++shared > 1) return true;
                ++i, ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        return false;
    };

    auto dfs = [&](auto&& self, int start) -> void {
        spend_node(result.nodes, options.node_budget);
        if (static_cast<long long>(chosen.size()) > best) {
            best = static_cast<long long>(chosen.size());
            best_witness = chosen_index;
        }
        for (int j = start; j < total; ++j) {
            if (chosen.empty() && j > 0) break;  // first-hyperedge symmetry
            if (static_cast<long long>(chosen.size()) + (total - j) <= best) break;
            if (linear) {
                bool ok = true;
                for (const auto& h : chosen)
                    if (shares_two(h, candidates[j])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            chosen.push_back(candidates[j]);
            chosen_index.push_back(j);
            // The prefix is Berge-free, so only certificates through the new
            // hyperedge (always the lexicographically largest, hence last
            // after canonical sorting) can appear.
            DetectOptions det;
            det.require_hyperedge = static_cast<int>(chosen.size()) - 1;
            const Hypergraph h(n, chosen, r);
            if (contains_berge(h, pattern, det).status == DetectResult::Status::free)
                self(self, j + 1);
            chosen.pop_back();
            chosen_index.pop_back();
        }
    };
    dfs(dfs, 0);

    result.value = best;
    std::vector<std::vector<int>> witness_edges;
    for (int j : best_witness) witness_edges.push_back(candidates[j]);
    result.witness_hypergraph = Hypergraph(n, std::move(witness_edges), r);
    return result;
}

// Shared edge-subset search for the two graph modes. The value function is
// monotone under edge insertion, so every pattern-free subset is visited
// with current-best pruning via an upper bound on the remaining gain.
SearchResult run_graph_search(SearchMode mode, int n, int r, const Graph& pattern,
                              const SearchOptions& options) {
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("pattern needs at least one edge");
    SearchResult result;
    result.mode = mode;
    result.n = n;
    result.r = r;
    result.pattern = pattern;

    std::vector<Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
    const int total = static_cast<int>(candidates.size());

    BitAdjacency adj(n);
    std::vector<int> degree(n, 0);
    std::vector<int> chosen;
    long long value = 0;
    long long best = -1;
    std::vector<int> best_witness;

    // Largest possible gain of one edge insertion.
    long long per_edge_gain = 1;
    if (mode == SearchMode::generalized && r > 2) {
        per_edge_gain = 1;
        for (int i = 0; i < r - 2; ++i) per_edge_gain = per_edge_gain * (n - 2 - i) / (i + 1);
    }

    // Number of cliques on `size` vertices inside the vertex set `mask`,
    // counting each once by always descending to larger labels.
    auto drop_up_to = [](std::vector<std::uint64_t>& m, int v) {
        const int w = v >> 6, b = v & 63;
        for (int i = 0; i < w; ++i) m[i] = 0;
        m[w] = (b == 63) ? 0 : (m[w] & ~((std::uint64_t{2} << b) - 1));
    };
    auto count_cliques = [&](auto&& self, const std::vector<std::uint64_t>& mask,
                             int size) -> long long {
        if (size == 0) return 1;
        long long count = 0;
        for_each_bit(mask.data(), static_cast<int>(mask.size()), [&](int v) {
            std::vector<std::uint64_t> next(mask.size());
            const std::uint64_t* row = adj.row(v);
            for (std::size_t w = 0; w < mask.size(); ++w) next[w] = mask[w] & row[w];
            drop_up_to(next, v);
            count += self(self, next, size - 1);
        });
        return count;
    };

    auto gain_of = [&](Edge e) -> long long {
        if (mode == SearchMode::graph || r == 2) return 1;
        // New r-cliques through edge e: (r-2)-cliques in the common
        // neighborhood of its endpoints.
        std::vector<std::uint64_t> common((n + 63) / 64);
        const std::uint64_t* ru = adj.row(e.first);
        const std::uint64_t* rv = adj.row(e.second);
        for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
        return count_cliques(count_cliques, common, r - 2);
    };

    // Anchored pattern check against the maintained adjacency.
    std::vector<int> psi(pattern.vertex_count(), -1);
    auto creates_pattern = [&](Edge host_edge) {
        if (pattern.vertex_count() > n) return false;
        bool found = false;
        for (const auto& [pu, pv] : pattern.edges()) {
            for (int flip = 0; flip < 2 && !found; ++flip) {
                std::fill(psi.begin(), psi.end(), -1);
                psi[pu] = flip ? host_edge.second : host_edge.first;
                psi[pv] = flip ? host_edge.first : host_edge.second;
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

    auto dfs = [&](auto&& self, int start) -> void {
        spend_node(result.nodes, options.node_budget);
        if (value > best) {
            best = value;
            best_witness = chosen;
        }
        for (int j = start; j < total; ++j) {
            if (chosen.empty() && j > 0) break;  // first-edge symmetry
            if (value + per_edge_gain * (total - j) <= best) break;
            const auto [u, v] = candidates[j];
            adj.set(u, v);
            ++degree[u], ++degree[v];
            const bool free = !creates_pattern(candidates[j]);
            if (free) {
                const long long gain = gain_of(candidates[j]);
                value += gain;
                chosen.push_back(j);
                self(self, j + 1);
                chosen.pop_back();
                value -= gain;
            }
            adj.clear(u, v);
            --degree[u], --degree[v];
        }
    };
    dfs(dfs, 0);

    result.value = best;
    std::vector<Edge> witness_edges;
    for (int j : best_witness) witness_edges.push_back(candidates[j]);
    result.witness_graph = Graph(n, std::move(witness_edges));
    return result;
}

SearchResult with_cache(const std::string& key, const SearchOptions& options,
                        const std::function<SearchResult()>& compute) {
    if (options.cache) {
        if (auto cached = options.cache->load(key)) return *cached;
    }
    Stopwatch watch;
    SearchResult result = compute();
    result.elapsed_seconds = watch.seconds();
    if (options.cache) options.cache->store(key, result);
    return result;
}

}  // namespace

SearchResult exact_berge_turan(int n, int r, const Graph& pattern, bool linear,
                               const SearchOptions& options, const SearchCaps& caps) {
    if (n < 1 || r < 2) throw std::invalid_argument("need n >= 1 and r >= 2");
    if (n > caps.hypergraph_n)
        throw resource_limit_error("n exceeds the hypergraph search cap (" +
                                   std::to_string(caps.hypergraph_n) + ")");
    const SearchMode mode = linear ? SearchMode::linear_hypergraph : SearchMode::hypergraph;
    return with_cache(search_cache_key(mode, n, r, pattern), options,
                      [&] { return run_berge_search(n, r, pattern, linear, options); });
}

SearchResult exact_turan(int n, const Graph& pattern, const SearchOptions& options,
                         const SearchCaps& caps) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n > caps.graph_n)
        throw resource_limit_error("n exceeds the graph search cap (" +
                                   std::to_string(caps.graph_n) + ")");
    return with_cache(search_cache_key(SearchMode::graph, n, 2, pattern), options,
                      [&] { return run_graph_search(SearchMode::graph, n, 2, pattern, options); });
}

SearchResult exact_generalized_turan(int n, int r, const Graph& pattern,
                                     const SearchOptions& options, const SearchCaps& caps) {
    if (n < 1 || r < 2) throw std::invalid_argument("need n >= 1 and r >= 2");
    if (n > caps.generalized_n)
        throw resource_limit_error("n exceeds the generalized search cap (" +
                                   std::to_string(caps.generalized_n) + ")");
    return with_cache(
        search_cache_key(SearchMode::generalized, n, r, pattern), options,
        [&] { return run_graph_search(SearchMode::generalized, n, r, pattern, options); });
}

SandwichResult sandwich_check(int n, int r, const Graph& pattern, const SearchOptions& options,
                              const SearchCaps& caps) {
    if (r < 3) throw std::invalid_argument("the sandwich relation needs r >= 3");
    SandwichResult result;
    result.clique_count = exact_generalized_turan(n, r, pattern, options, caps);
    result.hyperedge_count = exact_berge_turan(n, r, pattern, false, options, caps);
    result.edge_count = exact_turan(n, pattern, options, caps);
    result.lower_ok = result.clique_count.value <= result.hyperedge_count.value;
    result.upper_ok =
        result.hyperedge_count.value <= result.clique_count.value + result.edge_count.value;
    return result;
}

OracleCache::OracleCache(std::filesystem::path directory) : directory_(std::move(directory)) {
    std::filesystem::create_directories(directory_);
}

std::filesystem::path OracleCache::default_directory() {
    if (const char* env = std::getenv("BERGE_CACHE_DIR")) return env;
    return ".berge-cache";
}

namespace {

std::string fnv64_hex(const std::string& s) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace

std::string search_cache_key(SearchMode mode, int n, int r, const Graph& pattern) {
    return to_string(mode) + ";n=" + std::to_string(n) + ";r=" + std::to_string(r) +
           ";pattern=" + canonical_graph_key(pattern);
}

std::optional<SearchResult> OracleCache::load(const std::string& key) const {
    const auto path = directory_ / (fnv64_hex(key) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!j.is_object() || j.value("key", "") != key) return std::nullopt;

    SearchResult result;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "hypergraph") result.mode = SearchMode::hypergraph;
    else if (mode == "linear-hypergraph") result.mode = SearchMode::linear_hypergraph;
    else if (mode == "graph") result.mode = SearchMode::graph;
    else if (mode == "generalized") result.mode = SearchMode::generalized;
    else return std::nullopt;
    result.n = j.at("n").get<int>();
    result.r = j.at("r").get<int>();
    result.pattern = graph_from_json(j.at("pattern"));
    result.value = j.at("value").get<long long>();
    result.nodes = j.at("nodes").get<std::uint64_t>();
    result.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    if (j.contains("witness_hypergraph"))
        result.witness_hypergraph = hypergraph_from_json(j.at("witness_hypergraph"));
    if (j.contains("witness_graph")) result.witness_graph = graph_from_json(j.at("witness_graph"));
    result.from_cache = true;
    return result;
}

void OracleCache::store(const std::string& key, const SearchResult& result) const {
    json j{{"key", key},
           {"mode", to_string(result.mode)},
           {"n", result.n},
           {"r", result.r},
           {"pattern", graph_to_json(result.pattern)},
           {"value", result.value},
           {"nodes", result.nodes},
           {"elapsed_seconds", result.elapsed_seconds}};
    if (result.witness_hypergraph)
        j["witness_hypergraph"] = hypergraph_to_json(*result.witness_hypergraph);
    if (result.witness_graph) j["witness_graph"] = graph_to_json(*result.witness_graph);
    const auto path = directory_ / (fnv64_hex(key) + ".json");
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

}  // namespace berge
