#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree::detail {

/// Fixed-width dynamic bitset over vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : words_(static_cast<std::size_t>((universe + 63) / 64), 0), universe_(universe) {}

    int universe() const noexcept { return universe_; }

    void set(int v) { words_[word(v)] |= bit(v); }
    void reset(int v) { words_[word(v)] &= ~bit(v); }
    bool test(int v) const { return (words_[word(v)] & bit(v)) != 0; }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    /// |this & other|
    int count_and(const VertexSet& other) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    /// |this & ~other|
    int count_and_not(const VertexSet& other) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::vector<std::uint64_t> words_;
    int universe_ = 0;
};

inline std::vector<VertexSet> adjacency_sets(const Graph& g) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()), VertexSet(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v))
            rows[static_cast<std::size_t>(v)].set(w);
    return rows;
}

}  // namespace spextree::detail
