#pragma once

#include "eqdeg/graph.hpp"

#include <optional>
#include <vector>

namespace eqdeg {

/// Two distinct vertices of the same degree joined by a simple path with
/// exactly `path.size() - 1` edges.
struct PathWitness {
    Vertex u = 0;
    Vertex w = 0;
    std::vector<Vertex> path;  ///< u, ..., w
    int shared_degree = 0;

    int length() const { return static_cast<int>(path.size()) - 1; }
    bool operator==(const PathWitness&) const = default;
};

/// Whether a simple path with exactly `length` edges joins u and w. When one
/// exists and `path` is non-null, the lexicographically first such path is
/// written there. Lengths of order or more are simply false. Throws
/// InputError for u == w, vertices out of range, or length < 1.
bool path_exists_exact(const Graph& g, Vertex u, Vertex w, int length, std::vector<Vertex>* path = nullptr);

/// Unordered equal-degree pairs (u < w), sorted lexicographically.
std::vector<Edge> equal_degree_pairs(const Graph& g);

/// First equal-degree pair (in lexicographic pair order) joined by an
/// exact-length simple path, with the lexicographically first such path.
/// Uses depth-limited search for every length. Length >= order yields no
/// witness; length < 1 throws InputError.
std::optional<PathWitness> has_equal_degree_path(const Graph& g, int length);

/// Length-three specialisation using row intersections. Returns exactly the
/// witness has_equal_degree_path(g, 3) would.
std::optional<PathWitness> has_equal_degree_p3(const Graph& g);

/// Same result as has_equal_degree_path, routed to the fastest exact method
/// for the given length.
std::optional<PathWitness> find_equal_degree_path(const Graph& g, int length);

/// Independent re-check of a witness against the graph: distinct path
/// vertices, consecutive adjacency, endpoint degrees and the expected length.
bool witness_is_valid(const Graph& g, const PathWitness& witness, int length);

}  // namespace eqdeg
