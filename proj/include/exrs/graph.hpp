#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exrs/errors.hpp"

namespace exrs {

// Finite simple graph: symmetric bit-packed adjacency, zero diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n)
        : n_(n), row_words_((n + 63) / 64), bits_(n * row_words_, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool has_edge(std::size_t i, std::size_t j) const {
        return (word(i, j) >> (j & 63)) & 1u;
    }

    void set_edge(std::size_t i, std::size_t j) {
        if (i == j) throw ValidationError("simple graph has no self-loops");
        word(i, j) |= std::uint64_t{1} << (j & 63);
        word(j, i) |= std::uint64_t{1} << (i & 63);
    }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < row_words_; ++w)
            d += static_cast<std::size_t>(__builtin_popcountll(bits_[i * row_words_ + w]));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n_; ++i) total += degree(i);
        return total / 2;
    }

    // Number of common neighbours of i and j.
    std::size_t common_neighbors(std::size_t i, std::size_t j) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < row_words_; ++w)
            c += static_cast<std::size_t>(__builtin_popcountll(
                bits_[i * row_words_ + w] & bits_[j * row_words_ + w]));
        return c;
    }

    // Induced subgraph on the given vertices (order preserved).
    Graph induced(const std::vector<std::size_t>& vertices) const {
        Graph g(vertices.size());
        for (std::size_t a = 0; a < vertices.size(); ++a)
            for (std::size_t b = a + 1; b < vertices.size(); ++b)
                if (has_edge(vertices[a], vertices[b])) g.set_edge(a, b);
        return g;
    }

private:
    std::uint64_t& word(std::size_t i, std::size_t j) {
        return bits_[i * row_words_ + (j >> 6)];
    }
    const std::uint64_t& word(std::size_t i, std::size_t j) const {
        return bits_[i * row_words_ + (j >> 6)];
    }

    std::size_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace exrs
