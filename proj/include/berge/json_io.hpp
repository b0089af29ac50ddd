#pragma once

#include <string>

#include <json.hpp>

#include "berge/detect.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Wire formats. Vertices are 0-indexed; emission is canonical-sorted:
//   Graph       {"n": int, "edges": [[u,v],...]}
//   Hypergraph  {"n": int, "uniform": int|null, "hyperedges": [[v,...],...]}
//   Certificate {"psi": {"0": h,...}, "phi": {"u-v": hyperedgeIndex,...}}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const BergeCertificate& c, const Graph& pattern);
BergeCertificate certificate_from_json(const nlohmann::json& j, const Graph& pattern);

}  // namespace berge
