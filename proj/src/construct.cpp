#include "berge/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "berge/bounds.hpp"
#include "berge/patterns.hpp"
#include "berge/transform.hpp"

namespace berge {

namespace {

long long linear_count_formula(int n, int r) {
    const long long x_range = n / (2 * r);
    const long long m_range = n / (2 * r * (r - 1));
    return x_range * (m_range + 1);
}

// As-equal-as-possible factors over `classes` slots summing to total, the
// larger values on lower-indexed slots.
std::vector<int> default_factors(int classes, int total) {
    std::vector<int> f(classes, total / classes);
    for (int i = 0; i < total % classes; ++i) ++f[i];
    return f;
}

// Shared machinery for the blown-up linear constructions: blow the
// (classes)-uniform linear construction up classwise so each hyperedge has
// sum(factors) vertices, then pad with isolated vertices to exactly n.
Hypergraph blown_linear(int n, int classes, const std::vector<int>& factors) {
    const int r = std::accumulate(factors.begin(), factors.end(), 0);
    const int base_n = static_cast<int>(static_cast<long long>(n) * classes / r);
    if (base_n < 2 * classes)
        throw std::invalid_argument("too few vertices for the base linear construction");
    const Construction base = linear_construction(base_n, classes);
    const int class_size = base_n / classes;
    std::vector<int> per_vertex(base_n, 1);
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < class_size; ++j) per_vertex[i * class_size + j] = factors[i];
    const BlowupResult blown = blowup(base.hypergraph, per_vertex);
    if (blown.hypergraph.vertex_count() > n)
        throw std::invalid_argument("blowup does not fit the requested vertex count");
    return Hypergraph(n, blown.hypergraph.hyperedges(), blown.hypergraph.uniform());
}

}  // namespace

Construction linear_construction(int n, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n < 2 * r) throw std::invalid_argument("need n >= 2r");
    const int class_size = n / r;
    const int x_max = n / (2 * r);
    const int m_max = n / (2 * r * (r - 1));
    std::vector<std::vector<int>> hyperedges;
    for (int x = 1; x <= x_max; ++x) {
        for (int m = 0; m <= m_max; ++m) {
            std::vector<int> he(r);
            for (int i = 1; i <= r; ++i) {
                const int j = x + (i - 1) * m;  // stays within 1..class_size
                he[i - 1] = (i - 1) * class_size + (j - 1);
            }
            hyperedges.push_back(std::move(he));
        }
    }
    Construction c{Hypergraph(n, std::move(hyperedges), r), {}};
    c.claims.linear = true;
    c.claims.uniform = r;
    c.claims.count_formula = linear_count_formula(n, r);
    c.claims.free_of = {"K" + std::to_string(r + 1)};
    return c;
}

Construction clique_blowup_construction(int n, int s, int r,
                                        std::optional<std::vector<int>> factors) {
    if (s < 3) throw std::invalid_argument("clique order must be at least 3");
    if (r < 2 || r > (s - 1) * (s - 1))
        throw std::invalid_argument("uniformity out of range [2, (s-1)^2]");
    const std::string clique_name = "K" + std::to_string(s);
    if (r <= s - 1) {
        // A linear host of uniformity below s already has an (r)-partite
        // shadow with no clique on s vertices.
        if (factors) throw std::invalid_argument("factors only apply above uniformity s-1");
        Construction c = linear_construction(n, r);
        if (std::find(c.claims.free_of.begin(), c.claims.free_of.end(), clique_name) ==
            c.claims.free_of.end())
            c.claims.free_of.push_back(clique_name);
        return c;
    }
    std::vector<int> f = factors ? *factors : default_factors(s - 1, r);
    if (static_cast<int>(f.size()) != s - 1)
        throw std::invalid_argument("need one factor per class");
    if (std::accumulate(f.begin(), f.end(), 0) != r)
        throw std::invalid_argument("factors must sum to the uniformity");
    for (int w : f)
        if (w < 1 || w > s - 1) throw std::invalid_argument("factors must lie in [1, s-1]");

    Construction c{blown_linear(n, s - 1, f), {}};
    c.claims.uniform = r;
    const int base_n = static_cast<int>(static_cast<long long>(n) * (s - 1) / r);
    c.claims.count_formula = linear_count_formula(base_n, s - 1);
    c.claims.free_of = {clique_name};
    return c;
}

Construction admissible_blowup_construction(int n, int c, int t, int r,
                                            std::optional<std::vector<int>> factors) {
    if (c < 3) throw std::invalid_argument("contracted chromatic floor must be at least 3");
    if (t < 1) throw std::invalid_argument("block-size cap must be at least 1");
    if (r < 2 || r > (c - 1) * t)
        throw std::invalid_argument("uniformity out of range [2, (c-1)t]");

    // Patterns whose t-admissible contractions all need at least c colors;
    // the construction is Berge-free of every one of them.
    auto claimed_free = [&](int tt, int cc) {
        std::vector<std::string> names;
        for (const char* name : {"K3", "K4", "K5", "K2,1,1", "C5"}) {
            const Graph f = pattern_by_name(name);
            if (tt <= f.vertex_count() - 1 && min_contracted_chromatic(f, tt) >= cc)
                names.push_back(name);
        }
        return names;
    };

    if (r < c) {
        if (factors) throw std::invalid_argument("factors only apply at uniformity c or above");
        Construction out = linear_construction(n, r);
        for (auto& name : claimed_free(t, c))
            if (std::find(out.claims.free_of.begin(), out.claims.free_of.end(), name) ==
                out.claims.free_of.end())
                out.claims.free_of.push_back(name);
        return out;
    }
    std::vector<int> f = factors ? *factors : default_factors(c - 1, r);
    if (static_cast<int>(f.size()) != c - 1)
        throw std::invalid_argument("need one factor per class");
    if (std::accumulate(f.begin(), f.end(), 0) != r)
        throw std::invalid_argument("factors must sum to the uniformity");
    for (int w : f)
        if (w < 1 || w > t) throw std::invalid_argument("factors must lie in [1, t]");

    Construction out{blown_linear(n, c - 1, f), {}};
    out.claims.uniform = r;
    const int base_n = static_cast<int>(static_cast<long long>(n) * (c - 1) / r);
    out.claims.count_formula = linear_count_formula(base_n, c - 1);
    out.claims.free_of = claimed_free(t, c);
    return out;
}

Construction rpartite_construction(int n, int r) {
    if (r < 2) throw std::invalid_argument("need at least two parts");
    if (n < r) throw std::invalid_argument("need n >= r");
    const int part = n / r;
    long long count = 1;
    for (int i = 0; i < r; ++i) {
        count *= part;
        if (count > 100'000'000LL)
            throw std::invalid_argument("transversal count too large for desk scale");
    }
    std::vector<std::vector<int>> hyperedges;
    hyperedges.reserve(static_cast<std::size_t>(count));
    std::vector<int> choice(r, 0);
    while (true) {
        std::vector<int> he(r);
        for (int i = 0; i < r; ++i) he[i] = i * part + choice[i];
        hyperedges.push_back(std::move(he));
        int i = r - 1;
        while (i >= 0 && choice[i] == part - 1) choice[i--] = 0;
        if (i < 0) break;
        ++choice[i];
    }
    Construction c{Hypergraph(n, std::move(hyperedges), r), {}};
    c.claims.uniform = r;
    c.claims.count_formula = count;
    c.claims.free_of = {"K" + std::to_string(r + 1)};
    return c;
}

namespace {

// Arithmetic over the supported prime-power fields. Primes use modular
// arithmetic; GF(4) uses explicit tables over {0, 1, a, a+1}.
struct SmallField {
    int q;
    int add(int a, int b) const {
        if (q == 4) return a ^ b;
        return (a + b) % q;
    }
    int mul(int a, int b) const {
        if (q == 4) {
            static constexpr std::array<std::array<int, 4>, 4> table{{{0, 0, 0, 0},
                                                                      {0, 1, 2, 3},
                                                                      {0, 2, 3, 1},
                                                                      {0, 3, 1, 2}}};
            return table[a][b];
        }
        return (a * b) % q;
    }
};

using Triple = std::array<int, 3>;

// Canonical projective representatives: leading nonzero coordinate is 1.
std::vector<Triple> projective_points(const SmallField& field) {
    std::vector<Triple> points;
    for (int y = 0; y < field.q; ++y)
        for (int z = 0; z < field.q; ++z) points.push_back({1, y, z});
    for (int z = 0; z < field.q; ++z) points.push_back({0, 1, z});
    points.push_back({0, 0, 1});
    return points;
}

}  // namespace

Graph projective_incidence_graph(int q) {
    if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7)
        throw std::invalid_argument("supported plane orders are 2, 3, 4, 5, 7");
    const SmallField field{q};
    const auto points = projective_points(field);
    const int count = static_cast<int>(points.size());  // q^2+q+1
    std::vector<Edge> edges;
    for (int p = 0; p < count; ++p) {
        for (int l = 0; l < count; ++l) {
            int dot = 0;
            for (int i = 0; i < 3; ++i)
                dot = field.add(dot, field.mul(points[p][i], points[l][i]));
            if (dot == 0) edges.push_back({p, count + l});
        }
    }
    return Graph(2 * count, std::move(edges));
}

Construction c4_free_construction(const Graph& base, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("copy counts must lie in [1, 3]");

    // Two-color the base; color 0 is the side receiving i copies.
    const int n = base.vertex_count();
    std::vector<int> side(n, -1);
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : base.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    throw std::invalid_argument("base graph is not bipartite");
                }
            }
        }
    }
    // C4-freeness: no two vertices share two common neighbors.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            const auto& nu = base.neighbors(u);
            for (int w : nu)
                if (base.adjacent(v, w) && ++common >= 2)
                    throw std::invalid_argument("base graph contains a C4");
        }

    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + (side[v] == 0 ? i : j);
    std::vector<std::vector<int>> hyperedges;
    for (const auto& [u, v] : base.edges()) {
        std::vector<int> he;
        for (int c = 0; c < (side[u] == 0 ? i : j); ++c) he.push_back(offset[u] + c);
        for (int c = 0; c < (side[v] == 0 ? i : j); ++c) he.push_back(offset[v] + c);
        hyperedges.push_back(std::move(he));
    }
    std::optional<int> uniform;
    if (!base.edges().empty()) uniform = i + j;
    Construction c{Hypergraph(offset[n], std::move(hyperedges), uniform), {}};
    c.claims.uniform = uniform;
    c.claims.count_formula = base.edge_count();
    c.claims.free_of = {"C4"};
    if (i == 1 && j == 1) c.claims.linear = true;
    return c;
}

}  // namespace berge
