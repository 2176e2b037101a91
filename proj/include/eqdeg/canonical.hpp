#pragma once

#include "eqdeg/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace eqdeg {

/// Label-invariant encoding of an isomorphism class: the upper triangle of the
/// canonically relabeled graph, column-major (x(0,1), x(0,2), x(1,2), ...),
/// packed eight bits per byte, most significant bit first.
struct CanonicalForm {
    int order = 0;
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Result of the canonical labeling search.
struct CanonicalLabeling {
    /// order[i] is the vertex placed at canonical position i.
    std::vector<Vertex> order;
    /// Automorphisms discovered during the search, as images: gen[v] = image of v.
    std::vector<std::vector<Vertex>> automorphisms;
};

/// Canonical labeling by ordered equitable refinement followed by
/// individualization backtracking that minimises the column-major upper
/// triangle of the relabeled graph. Optional `colors` (one entry per vertex)
/// restricts the search to colour-preserving labelings; colour classes are
/// placed in increasing colour order.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// The graph relabeled so vertex labeling.order[i] becomes i.
Graph apply_labeling(const Graph& g, std::span<const Vertex> order);

Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff some automorphism of g maps a to b.
bool same_orbit(const Graph& g, Vertex a, Vertex b);

/// Packed 64-bit code for small orders (at most kMaxCodeOrder vertices): bit
/// (total-1-t) holds the t-th upper-triangle entry, so integer order equals
/// lexicographic bitstring order.
inline constexpr int kMaxCodeOrder = 11;

std::uint64_t code_of(const Graph& g, std::span<const Vertex> order);
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int order, std::uint64_t code);

}  // namespace eqdeg
