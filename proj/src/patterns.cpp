#include "berge/patterns.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace berge {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("need at least two parts");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int c = 0; c < parts[i]; ++c) part_of[v++] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) edges.push_back({u, w});
    return Graph(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        edges.push_back(make_edge(i, 5 + i));                // spokes
    }
    return Graph(10, std::move(edges));
}

namespace {

bool parse_int(const std::string& s, std::size_t& pos, int& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        if (value > 64) return false;  // desk-scale guard
        ++pos;
    }
    out = static_cast<int>(value);
    return true;
}

}  // namespace

Graph pattern_by_name(const std::string& name) {
    if (name == "Petersen" || name == "petersen") return petersen_graph();
    if (name == "K211") return complete_multipartite({2, 1, 1});
    if (name.size() >= 2) {
        const char kind = name[0];
        std::size_t pos = 1;
        int first = 0;
        if ((kind == 'K' || kind == 'P' || kind == 'C') && parse_int(name, pos, first)) {
            if (pos == name.size()) {
                if (kind == 'K' && first >= 1) return complete_graph(first);
                if (kind == 'P' && first >= 2) return path_graph(first);
                if (kind == 'C' && first >= 3) return cycle_graph(first);
            } else if (kind == 'K' && name[pos] == ',') {
                std::vector<int> parts{first};
                while (pos < name.size() && name[pos] == ',') {
                    ++pos;
                    int p = 0;
                    if (!parse_int(name, pos, p)) break;
                    parts.push_back(p);
                }
                if (pos == name.size() && parts.size() >= 2)
                    return complete_multipartite(parts);
            }
        }
    }
    throw std::invalid_argument("unknown pattern name: " + name);
}

std::vector<std::string> builtin_pattern_names() {
    std::vector<std::string> names = {"K2", "K3",  "K4",  "K5",      "K6", "P3",
                                      "P4", "C4",  "C5",  "C6",      "K211", "Petersen"};
    for (int s = 1; s <= 4; ++s)
        for (int t = s; t <= 4; ++t)
            names.push_back("K" + std::to_string(s) + "," + std::to_string(t));
    return names;
}

}  // namespace berge
