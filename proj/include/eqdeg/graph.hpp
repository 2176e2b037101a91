#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eqdeg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

/// Number of 64-bit words backing one adjacency row. Orders up to 128 use a
/// fixed two-word row; larger orders grow the row to fit.
constexpr int row_words_for(int order) noexcept
{
    return order <= 128 ? 2 : (order + kWordBits - 1) / kWordBits;
}

/// Immutable simple undirected graph on vertices 0..order-1 with bitset rows.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on `order` vertices.
    explicit Graph(int order);

    /// Builds a graph from an edge list. Duplicate pairs collapse; an
    /// out-of-range endpoint or a loop throws InputError.
    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const noexcept { return order_; }
    int row_words() const noexcept { return words_; }

    bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::span<const Word> row(Vertex v) const noexcept
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(Vertex v) const noexcept;
    std::vector<int> degrees() const;
    std::size_t edge_count() const noexcept;

    /// Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    /// Neighbours of v in increasing order.
    std::vector<Vertex> neighbors(Vertex v) const;

    Graph complement() const;

    /// Copy of this graph with {u,v} added or removed.
    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    /// Graph H with H.adjacent(perm[a], perm[b]) == adjacent(a, b).
    /// `perm` must be a permutation of 0..order-1.
    Graph relabeled(std::span<const Vertex> perm) const;

    /// Induced subgraph on `keep`, renumbered in the given order.
    Graph induced(std::span<const Vertex> keep) const;

    /// True iff every edge of this graph is an edge of `other` (same order).
    bool is_subgraph_of(const Graph& other) const;

    bool operator==(const Graph& other) const = default;

private:
    friend class GraphBuilder;

    void set(Vertex u, Vertex v, bool on) noexcept;

    int order_ = 0;
    int words_ = row_words_for(0);
    std::vector<Word> bits_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int order) : graph_(order) {}
    explicit GraphBuilder(Graph start) : graph_(std::move(start)) {}

    int order() const noexcept { return graph_.order(); }

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

    Graph build() && { return std::move(graph_); }
    Graph build() const& { return graph_; }

private:
    void check(Vertex u, Vertex v) const;

    Graph graph_;
};

// Row helpers shared by the algorithm modules.

inline int popcount(std::span<const Word> r) noexcept
{
    int c = 0;
    for (Word w : r)
        c += std::popcount(w);
    return c;
}

inline int popcount_and(std::span<const Word> a, std::span<const Word> b) noexcept
{
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

inline bool test_bit(std::span<const Word> r, int i) noexcept
{
    return (r[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::span<Word> r, int i) noexcept
{
    r[static_cast<std::size_t>(i) >> 6] |= Word{1} << (i & 63);
}

inline void clear_bit(std::span<Word> r, int i) noexcept
{
    r[static_cast<std::size_t>(i) >> 6] &= ~(Word{1} << (i & 63));
}

/// Lowest set bit index, or -1.
inline int first_bit(std::span<const Word> r) noexcept
{
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i])
            return static_cast<int>(i * kWordBits) + std::countr_zero(r[i]);
    return -1;
}

}  // namespace eqdeg
