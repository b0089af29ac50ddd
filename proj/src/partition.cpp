#include "berge/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block rejected");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(n_, -1);
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        for (int v : blocks[i]) {
            if (v < 0 || v >= n_) throw std::invalid_argument("block vertex out of range");
            if (block_of_[v] != -1) throw std::invalid_argument("blocks are not disjoint");
            block_of_[v] = i;
        }
    }
    for (int v = 0; v < n_; ++v)
        if (block_of_[v] == -1) throw std::invalid_argument("blocks do not cover the vertex set");
    blocks_ = std::move(blocks);
}

VertexPartition VertexPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int v = 0; v < n; ++v) blocks[v] = {v};
    return VertexPartition(n, std::move(blocks));
}

}  // namespace berge
