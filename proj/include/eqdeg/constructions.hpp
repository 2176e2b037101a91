#pragma once

#include "eqdeg/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqdeg {

// Vertex numbering: bipartite parts are contiguous (first part first); half
// graphs place u_1..u_n at 0..n-1 and v_1..v_n at n..2n-1.

/// K_{a,b} on parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// H_n: u_i ~ v_j iff i <= j. Degrees 1..n, each twice; n(n+1)/2 edges.
Graph half_graph(int n);

/// G_n for even n: H_n minus u_{n/2}v_{n/2} and u_{n/2+1}v_{n/2+1}, plus
/// u_{n/2}u_{n/2+1} and v_{n/2}v_{n/2+1}.
Graph modified_half_graph(int n);

/// Complement of the disjoint union of cliques K_1, K_2, ..., K_m (cliques
/// laid out contiguously in increasing size). Order m(m+1)/2.
Graph clique_union_complement(int m);

/// K_{n,n} minus the edge {0, n}.
Graph k_nn_minus(int n);

/// K_{n-1,n+1} plus an edge xy inside the part of size n+1 (x, y its first
/// two vertices), minus the first edge at x other than xy. n - 2 triangles.
Graph tight_triangle_a(int n);

/// K_{n,n} plus an edge xy inside the first part (x = 0, y = 1), minus the
/// two first edges at x other than xy. n - 2 triangles.
Graph tight_triangle_b(int n);

enum class Family {
    complete_bipartite,
    half_graph,
    modified_half_graph,
    clique_union_complement,
    k_nn_minus,
    tight_triangle_a,
    tight_triangle_b,
};

/// A named family plus its integer parameters, written `family:p1,p2`.
struct ConstructionSpec {
    Family family = Family::complete_bipartite;
    std::vector<int> params;

    bool operator==(const ConstructionSpec&) const = default;
};

std::string_view family_name(Family f);

/// Parses `family:p1[,p2]`; validates the parameter count and each family's
/// preconditions. Throws InputError.
ConstructionSpec parse_construction(std::string_view text);
std::string to_string(const ConstructionSpec& spec);

Graph build(const ConstructionSpec& spec);

/// Edge count the family's formula promises for these parameters.
std::size_t expected_edge_count(const ConstructionSpec& spec);

}  // namespace eqdeg
