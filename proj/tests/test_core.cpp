#include <doctest.h>

#include <random>
#include <set>

#include "berge/json_io.hpp"
#include "berge/patterns.hpp"
#include "berge/transform.hpp"
#include "naive.hpp"

using namespace berge;

TEST_CASE("graph construction canonicalizes and validates") {
    const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.degree(0) == 2);

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("hypergraph construction enforces set semantics") {
    const Hypergraph h(5, {{2, 1, 0}, {0, 1, 3}});
    CHECK(h.hyperedges() == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});
    CHECK(h.incident(0) == std::vector<int>{0, 1});
    CHECK(h.incident(4).empty());

    CHECK_THROWS_AS(Hypergraph(4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, {{3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, {{0, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, {{0, 1, 2}, {0, 1}}, 3), std::invalid_argument);
    CHECK(Hypergraph(4, {{0, 1, 2}}, 3).uniform() == 3);
}

TEST_CASE("shadow") {
    CHECK(shadow(Hypergraph(3, {{0, 1, 2}})) == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(shadow(Hypergraph(4, {})) == Graph(4, {}));
    // Union of the pair sets, duplicates collapsed.
    CHECK(shadow(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})) ==
          Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("is_linear") {
    CHECK(is_linear(Hypergraph(5, {{0, 1, 2}, {2, 3, 4}})));
    CHECK_FALSE(is_linear(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})));
    CHECK(is_linear(Hypergraph(3, {})));
}

TEST_CASE("linear hypergraphs cover each shadow edge exactly once") {
    std::mt19937 rng(7101);
    int checked = 0;
    while (checked < 60) {
        const Hypergraph h = naive::random_hypergraph(rng, 7, 5);
        if (!is_linear(h)) continue;
        ++checked;
        const Graph sh = shadow(h);
        for (const auto& [u, v] : sh.edges()) {
            int covering = 0;
            for (int i = 0; i < h.hyperedge_count(); ++i)
                if (h.hyperedge_contains(i, u) && h.hyperedge_contains(i, v)) ++covering;
            CHECK(covering == 1);
        }
    }
}

TEST_CASE("blowup basics") {
    SUBCASE("single edge doubled") {
        const auto r = blowup(Hypergraph(2, {{0, 1}}), {2, 2});
        CHECK(r.hypergraph == Hypergraph(4, {{0, 1, 2, 3}}));
        CHECK(r.hypergraph.uniform() == 4);
        CHECK(r.vertex_origin == std::vector<int>{0, 0, 1, 1});
        CHECK(r.hyperedge_origin == std::vector<int>{0});
    }
    SUBCASE("identity blowup") {
        const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
        const auto r = blowup(h, {1, 1, 1, 1, 1});
        CHECK(r.hypergraph == h);
    }
    SUBCASE("mixed factors sum to a uniformity") {
        // Both hyperedges blow up to 5 vertices, so the tag appears.
        const auto r = blowup(Hypergraph(4, {{0, 1}, {2, 3}}), {2, 3, 1, 4});
        CHECK(r.hypergraph.uniform() == 5);
        CHECK(r.hypergraph.hyperedge_count() == 2);
    }
    SUBCASE("unequal sums stay untagged") {
        const auto r = blowup(Hypergraph(3, {{0, 1}, {1, 2}}), {2, 1, 3});
        CHECK_FALSE(r.hypergraph.uniform().has_value());
    }
    CHECK_THROWS_AS(blowup(Hypergraph(2, {{0, 1}}), {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(blowup(Hypergraph(2, {{0, 1}}), {1}), std::invalid_argument);
}

TEST_CASE("blowup preserves hyperedge count and origin structure") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> factor_dist(1, 3);
    for (int trial = 0; trial < 80; ++trial) {
        const Hypergraph h = naive::random_hypergraph(rng, 6, 5);
        std::vector<int> factors(h.vertex_count());
        for (auto& f : factors) f = factor_dist(rng);
        const auto r = blowup(h, factors);
        CHECK(r.hypergraph.hyperedge_count() == h.hyperedge_count());
        // Each blown hyperedge is exactly the union of its source's copy sets.
        for (int i = 0; i < r.hypergraph.hyperedge_count(); ++i) {
            const auto& source = h.hyperedge(r.hyperedge_origin[i]);
            std::set<int> expect;
            for (int w = 0; w < r.hypergraph.vertex_count(); ++w)
                if (std::binary_search(source.begin(), source.end(), r.vertex_origin[w]))
                    expect.insert(w);
            const auto& got = r.hypergraph.hyperedge(i);
            CHECK(std::set<int>(got.begin(), got.end()) == expect);
        }
    }
}

TEST_CASE("shadow of a blowup is complete between and inside copy sets") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> factor_dist(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const Hypergraph h = naive::random_hypergraph(rng, 6, 4);
        std::vector<int> factors(h.vertex_count());
        for (auto& f : factors) f = factor_dist(rng);
        const auto r = blowup(h, factors);
        const Graph sh = shadow(r.hypergraph);
        std::vector<std::vector<int>> copies(h.vertex_count());
        for (int w = 0; w < r.hypergraph.vertex_count(); ++w)
            copies[r.vertex_origin[w]].push_back(w);
        for (const auto& he : h.hyperedges()) {
            for (int u : he) {
                // complete inside the copy set of a covered vertex (factor > 1)
                for (int a : copies[u])
                    for (int b : copies[u])
                        if (a < b) CHECK(sh.adjacent(a, b));
                // complete bipartite between copy sets of co-hyperedge vertices
                for (int v : he) {
                    if (u >= v) continue;
                    for (int a : copies[u])
                        for (int b : copies[v]) CHECK(sh.adjacent(a, b));
                }
            }
        }
    }
}

TEST_CASE("blowup by a uniform factor is linear iff hyperedges are disjoint") {
    // Exhaustive over small linear hypergraphs with hyperedges of size 2 or 3.
    const int n = 5;
    std::vector<std::vector<int>> candidates;
    for (const auto& s : naive::r_subsets(n, 2)) candidates.push_back(s);
    for (const auto& s : naive::r_subsets(n, 3)) candidates.push_back(s);

    auto share = [](const std::vector<int>& a, const std::vector<int>& b) {
        int count = 0;
        for (int x : a)
            if (std::binary_search(b.begin(), b.end(), x)) ++count;
        return count;
    };

    int linear_families = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() <= 4 && !pick.empty()) {
            std::vector<std::vector<int>> edges;
            bool linear_family = true, disjoint = true;
            for (std::size_t a = 0; a < pick.size(); ++a) {
                edges.push_back(candidates[pick[a]]);
                for (std::size_t b = a + 1; b < pick.size(); ++b) {
                    const int s = share(candidates[pick[a]], candidates[pick[b]]);
                    if (s > 1) linear_family = false;
                    if (s > 0) disjoint = false;
                }
            }
            if (linear_family) {
                ++linear_families;
                const Hypergraph h(n, edges);
                const auto r = blowup(h, std::vector<int>(n, 2));
                CHECK(is_linear(r.hypergraph) == disjoint);
            }
        }
        if (pick.size() == 4) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    CHECK(linear_families > 500);
}

TEST_CASE("contract") {
    const Graph path = path_graph(3);
    SUBCASE("singletons give the graph back") {
        CHECK(contract(path, VertexPartition::singletons(3)) == path);
        const Graph k211 = pattern_by_name("K211");
        CHECK(contract(k211, VertexPartition::singletons(4)) == k211);
    }
    SUBCASE("merging the endpoints of a path") {
        const Graph g = contract(path, VertexPartition(3, {{0, 2}, {1}}));
        CHECK(g == Graph(2, {{0, 1}}));
    }
    SUBCASE("intra-block edges vanish") {
        const Graph g = contract(complete_graph(3), VertexPartition(3, {{0, 1, 2}}));
        CHECK(g == Graph(1, {}));
    }
    CHECK_THROWS_AS(contract(path, VertexPartition(2, {{0}, {1}})), std::invalid_argument);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1, 2}, {}}), std::invalid_argument);
    const VertexPartition p(4, {{2, 3}, {0, 1}});
    CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(p.block_of(3) == 1);
}

TEST_CASE("named patterns") {
    CHECK(pattern_by_name("K5").edge_count() == 10);
    CHECK(pattern_by_name("P4").edge_count() == 3);
    CHECK(pattern_by_name("P2") == complete_graph(2));
    CHECK(pattern_by_name("C6").edge_count() == 6);
    CHECK(pattern_by_name("K3,4").edge_count() == 12);
    CHECK(pattern_by_name("K2,2") == complete_multipartite({2, 2}));
    CHECK(pattern_by_name("K211") == pattern_by_name("K2,1,1"));
    CHECK(pattern_by_name("Petersen").vertex_count() == 10);
    CHECK(pattern_by_name("petersen").edge_count() == 15);
    for (const auto& name : builtin_pattern_names()) CHECK_NOTHROW(pattern_by_name(name));
    CHECK_THROWS_AS(pattern_by_name("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_by_name("K"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_by_name("C2"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_by_name("K3,"), std::invalid_argument);
}

TEST_CASE("graph json round trip and canonical emission") {
    const Graph g(4, {{2, 0}, {1, 3}, {0, 1}});
    const auto j = graph_to_json(g);
    CHECK(j.dump() == R"({"edges":[[0,1],[0,2],[1,3]],"n":4})");
    CHECK(graph_from_json(j) == g);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph random = naive::random_graph(rng, 6, 0.4);
        CHECK(graph_from_json(graph_to_json(random)) == random);
    }
}

TEST_CASE("hypergraph json round trip") {
    const Hypergraph h(5, {{0, 1, 4}, {1, 2, 3}}, 3);
    const auto j = hypergraph_to_json(h);
    CHECK(j.dump() == R"({"hyperedges":[[0,1,4],[1,2,3]],"n":5,"uniform":3})");
    const Hypergraph back = hypergraph_from_json(j);
    CHECK(back == h);
    CHECK(back.uniform() == 3);

    const Hypergraph untagged(3, {{0, 1}});
    CHECK(hypergraph_to_json(untagged)["uniform"].is_null());
    CHECK_FALSE(hypergraph_from_json(hypergraph_to_json(untagged)).uniform().has_value());

    std::mt19937 rng(321);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph random = naive::random_hypergraph(rng, 7, 6);
        CHECK(hypergraph_from_json(hypergraph_to_json(random)) == random);
    }
}
