#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Adjacency matrix stored as 64-bit row chunks, for the backtracking
/// kernels. Rows are mutable so coloring/search code can maintain a graph
/// incrementally.
class BitAdjacency {
public:
    explicit BitAdjacency(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    static BitAdjacency from_graph(const Graph& g) {
        BitAdjacency a(g.vertex_count());
        for (const auto& [u, v] : g.edges()) a.set(u, v);
        return a;
    }

    int size() const { return n_; }
    int words() const { return words_; }

    void set(int u, int v) {
        bits_[idx(u, v)] |= bit(v);
        bits_[idx(v, u)] |= bit(u);
    }
    void clear(int u, int v) {
        bits_[idx(u, v)] &= ~bit(v);
        bits_[idx(v, u)] &= ~bit(u);
    }
    bool test(int u, int v) const { return bits_[idx(u, v)] & bit(v); }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * words_ + (v >> 6);
    }
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Calls fn(position) for every set bit, ascending.
template <class Fn>
inline void for_each_bit(const std::uint64_t* w, int words, Fn&& fn) {
    for (int i = 0; i < words; ++i) {
        std::uint64_t x = w[i];
        while (x) {
            const int b = std::countr_zero(x);
            fn(i * 64 + b);
            x &= x - 1;
        }
    }
}

}  // namespace berge
