#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Thrown when a search refuses to start (size cap) or to continue (node
/// budget). Oracle outputs are ground truth, so there is no approximate
/// fallback.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SearchMode { hypergraph, linear_hypergraph, graph, generalized };

std::string to_string(SearchMode mode);

struct SearchResult {
    SearchMode mode = SearchMode::hypergraph;
    int n = 0;
    int r = 0;  // uniformity (hypergraph modes) or clique order (generalized)
    Graph pattern;
    long long value = 0;
    /// Lexicographically smallest extremal object.
    std::optional<Hypergraph> witness_hypergraph;
    std::optional<Graph> witness_graph;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    bool from_cache = false;
};

class OracleCache;

struct SearchOptions {
    /// 0 = unlimited. Search states explored before refusing.
    std::uint64_t node_budget = 200'000'000;
    OracleCache* cache = nullptr;
};

struct SearchCaps {
    int hypergraph_n = 7;
    int graph_n = 9;
    int generalized_n = 8;
};

/// Maximum hyperedge count of an r-uniform (optionally linear) hypergraph on
/// n labeled vertices with no Berge copy of the pattern. Depth-first search
/// over candidate hyperedges in lexicographic order with current-best
/// pruning, an incremental Berge check anchored at each inserted hyperedge,
/// and first-hyperedge symmetry reduction.
SearchResult exact_berge_turan(int n, int r, const Graph& pattern, bool linear,
                               const SearchOptions& options = {}, const SearchCaps& caps = {});

/// Classical exact Turan number: maximum edge count of a pattern-free graph
/// on n labeled vertices.
SearchResult exact_turan(int n, const Graph& pattern, const SearchOptions& options = {},
                         const SearchCaps& caps = {});

/// Generalized Turan number: maximum number of complete subgraphs on r
/// vertices over pattern-free graphs on n labeled vertices.
SearchResult exact_generalized_turan(int n, int r, const Graph& pattern,
                                     const SearchOptions& options = {},
                                     const SearchCaps& caps = {});

struct SandwichResult {
    SearchResult clique_count;     // generalized Turan at (n, r)
    SearchResult hyperedge_count;  // Berge Turan at (n, r)
    SearchResult edge_count;       // Turan at n
    bool lower_ok = false;         // clique_count <= hyperedge_count
    bool upper_ok = false;         // hyperedge_count <= clique_count + edge_count
};

/// Exact check of the two-sided relation between the generalized Turan
/// number and the Berge Turan number at one grid point. Requires r >= 3.
SandwichResult sandwich_check(int n, int r, const Graph& pattern,
                              const SearchOptions& options = {}, const SearchCaps& caps = {});

/// Content-addressed on-disk store for search results, keyed by mode, n, r,
/// and the pattern's canonical form.
class OracleCache {
public:
    explicit OracleCache(std::filesystem::path directory);

    /// BERGE_CACHE_DIR when set, else ".berge-cache" in the working directory.
    static std::filesystem::path default_directory();

    std::optional<SearchResult> load(const std::string& key) const;
    void store(const std::string& key, const SearchResult& result) const;

    const std::filesystem::path& directory() const { return directory_; }

private:
    std::filesystem::path directory_;
};

std::string search_cache_key(SearchMode mode, int n, int r, const Graph& pattern);

}  // namespace berge
