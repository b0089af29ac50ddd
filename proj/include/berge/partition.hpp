#pragma once

#include <vector>

namespace berge {

/// Partition of the vertex set 0..n-1 into nonempty, pairwise disjoint
/// blocks. Canonical form: each block sorted ascending, blocks ordered by
/// their smallest element.
class VertexPartition {
public:
    VertexPartition(int n, std::vector<std::vector<int>> blocks);

    static VertexPartition singletons(int n);

    int vertex_count() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int v) const { return block_of_[v]; }

    bool operator==(const VertexPartition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

}  // namespace berge
