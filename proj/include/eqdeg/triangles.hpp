#pragma once

#include "eqdeg/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace eqdeg {

/// Triangle statistics of one graph.
///
/// `t[i]` counts pairs (v, T) where T is a triangle and v is a vertex outside
/// T adjacent to exactly i of its vertices. `weighted_sum` is
///     M = sum over edges uv of |N(u) ∩ N(v)| * |N̄(u) ∩ N̄(v)|,
/// with N̄(x) the non-neighbours of x other than x itself; it always equals
/// t[1] + 3 t[0].
struct TriangleProfile {
    std::uint64_t triangles = 0;  ///< t_G
    int book = 0;                 ///< b_G, the most triangles on one edge
    std::array<std::uint64_t, 4> t{};
    std::uint64_t weighted_sum = 0;

    bool operator==(const TriangleProfile&) const = default;
};

std::uint64_t triangle_count(const Graph& g);

/// Largest common-neighbour count over the edges; 0 without edges.
int book_size(const Graph& g);

TriangleProfile triangle_profile(const Graph& g);

/// First triangle in lexicographic vertex order, if any.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

enum class MantelClass {
    k_n_minus_1_n_plus_1,  ///< K_{n-1,n+1}
    k_nn_minus,            ///< K_{n,n} minus an edge
    k_nn,                  ///< K_{n,n}
    has_triangle,
    unclassified,          ///< triangle-free but none of the three; never expected
};

std::string_view to_string(MantelClass c);

struct MantelClassification {
    MantelClass kind = MantelClass::unclassified;
    std::optional<std::array<Vertex, 3>> triangle;  ///< set iff kind == has_triangle
};

/// For a graph on 2n >= 4 vertices with at least n^2 - 1 edges: either a
/// witness triangle, or which of K_{n-1,n+1}, K_{n,n} minus an edge, K_{n,n}
/// the graph is isomorphic to. Throws PreconditionError when the order is odd
/// or below 4, or when there are too few edges.
MantelClassification mantel_classify(const Graph& g);

}  // namespace eqdeg
