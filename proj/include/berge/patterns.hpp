#pragma once

#include <string>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

Graph complete_graph(int n);
Graph path_graph(int n);   // path on n vertices (n-1 edges)
Graph cycle_graph(int n);  // n >= 3
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen_graph();

/// Builds a pattern from a compact name:
///   K<n>            complete graph            (K3, K5, ...)
///   P<n>            path on n vertices        (P3, P4, ...)
///   C<n>            cycle on n vertices       (C4, C5, ...)
///   K<a>,<b>,...    complete multipartite     (K2,2  K2,1,1  K3,4 ...)
///   K211            alias for K2,1,1
///   Petersen
/// Throws std::invalid_argument for anything else.
Graph pattern_by_name(const std::string& name);

/// Names accepted by pattern_by_name that are guaranteed built in.
std::vector<std::string> builtin_pattern_names();

}  // namespace berge
