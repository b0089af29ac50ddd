#include "berge/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> hyperedges,
                       std::optional<int> uniform)
    : n_(n), uniform_(uniform) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& h : hyperedges) {
        std::sort(h.begin(), h.end());
        if (std::adjacent_find(h.begin(), h.end()) != h.end())
            throw std::invalid_argument("repeated vertex in hyperedge");
        if (h.size() < 2)
            throw std::invalid_argument("hyperedge of size < 2 rejected");
        if (h.front() < 0 || h.back() >= n)
            throw std::invalid_argument("hyperedge vertex out of range");
        if (uniform_ && static_cast<int>(h.size()) != *uniform_)
            throw std::invalid_argument("hyperedge violates uniformity tag");
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    if (std::adjacent_find(hyperedges.begin(), hyperedges.end()) != hyperedges.end())
        throw std::invalid_argument("duplicate hyperedge rejected");
    hyperedges_ = std::move(hyperedges);
    incident_.assign(n_, {});
    for (int i = 0; i < hyperedge_count(); ++i)
        for (int v : hyperedges_[i]) incident_[v].push_back(i);
}

bool Hypergraph::hyperedge_contains(int i, int v) const {
    const auto& h = hyperedges_[i];
    return std::binary_search(h.begin(), h.end(), v);
}

}  // namespace berge
