#pragma once

#include "eqdeg/graph.hpp"

#include <optional>
#include <vector>

namespace eqdeg {

/// Degree multiset of a graph with the scalars used throughout the extremal
/// arguments: the maximum degree, the largest repeated degree, and the number
/// of distinct degree values.
struct DegreeProfile {
    std::vector<int> degrees;        ///< degrees[v], indexed by vertex
    std::optional<int> max_degree;   ///< absent for the empty vertex set
    std::optional<int> beta;         ///< largest degree held by two or more vertices
    int distinct_count = 0;

    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace eqdeg
