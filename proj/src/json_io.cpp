#include "berge/json_io.hpp"

#include <stdexcept>

namespace berge {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph edge must be a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

json hypergraph_to_json(const Hypergraph& h) {
    json hyperedges = json::array();
    for (const auto& he : h.hyperedges()) hyperedges.push_back(he);
    json uniform;  // null
    if (h.uniform()) uniform = *h.uniform();
    return json{{"n", h.vertex_count()}, {"uniform", uniform}, {"hyperedges", hyperedges}};
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hyperedges"))
        throw std::invalid_argument("hypergraph JSON needs \"n\" and \"hyperedges\"");
    std::vector<std::vector<int>> hyperedges;
    for (const auto& he : j.at("hyperedges")) hyperedges.push_back(he.get<std::vector<int>>());
    std::optional<int> uniform;
    if (j.contains("uniform") && !j.at("uniform").is_null())
        uniform = j.at("uniform").get<int>();
    return Hypergraph(j.at("n").get<int>(), std::move(hyperedges), uniform);
}

json certificate_to_json(const BergeCertificate& c, const Graph& pattern) {
    json psi = json::object();
    for (std::size_t v = 0; v < c.psi.size(); ++v) psi[std::to_string(v)] = c.psi[v];
    json phi = json::object();
    const auto& edges = pattern.edges();
    for (std::size_t i = 0; i < c.phi.size(); ++i) {
        const std::string key =
            std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
        phi[key] = c.phi[i];
    }
    return json{{"psi", psi}, {"phi", phi}};
}

BergeCertificate certificate_from_json(const json& j, const Graph& pattern) {
    if (!j.is_object() || !j.contains("psi") || !j.contains("phi"))
        throw std::invalid_argument("certificate JSON needs \"psi\" and \"phi\"");
    BergeCertificate c;
    c.psi.assign(pattern.vertex_count(), -1);
    for (const auto& [key, value] : j.at("psi").items()) {
        const int v = std::stoi(key);
        if (v < 0 || v >= pattern.vertex_count())
            throw std::invalid_argument("certificate psi key out of range");
        c.psi[v] = value.get<int>();
    }
    c.phi.assign(pattern.edge_count(), -1);
    const auto& edges = pattern.edges();
    for (const auto& [key, value] : j.at("phi").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("certificate phi key must be \"u-v\"");
        const Edge e = make_edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw std::invalid_argument("certificate phi key is not a pattern edge");
        c.phi[it - edges.begin()] = value.get<int>();
    }
    return c;
}

}  // namespace berge
