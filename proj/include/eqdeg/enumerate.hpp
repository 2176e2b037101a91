#pragma once

#include "eqdeg/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace eqdeg {

/// Largest order the exhaustive engine accepts.
inline constexpr int kExhaustiveOrderLimit = 10;

enum class EnumerationMethod {
    /// Add a vertex to every class of the previous order in every possible
    /// way and keep one canonical code per class (hash-set dedup per level).
    levelwise,
    /// Accept a child only if the added vertex lies in the orbit of the
    /// child's canonical deletion vertex; siblings are deduplicated per
    /// parent. The last level is streamed rather than stored.
    canonical_augmentation,
};

struct EnumerationOptions {
    EnumerationMethod method = EnumerationMethod::levelwise;
    int workers = 1;
    int max_order = kExhaustiveOrderLimit;
};

struct EnumerationStats {
    int order = 0;
    std::uint64_t classes = 0;
    std::uint64_t candidates = 0;  ///< augmented graphs examined on the final level
    double wall_ms = 0;
};

/// Throws CapacityError if `order` exceeds the configured or hard ceiling,
/// InputError for order < 1 or workers < 1.
void check_enumeration_request(int order, const EnumerationOptions& options);

/// Sorted canonical codes (see canonical_code) of every isomorphism class
/// of graphs on `order` vertices.
std::vector<std::uint64_t> enumerate_class_codes(int order, const EnumerationOptions& options = {},
                                                 EnumerationStats* stats = nullptr);

/// Calls `visit` once per isomorphism class on the calling thread. With the
/// levelwise method (or more than one worker) classes arrive as canonical
/// graphs in increasing code order; canonical augmentation with one worker
/// streams representatives in generation order.
EnumerationStats enumerate_graphs(int order, const std::function<void(const Graph&)>& visit,
                                  const EnumerationOptions& options = {});

/// Parallel variant: `visit(worker, graph)` is called concurrently from
/// `options.workers` threads, sequentially within each worker. Work is split
/// by parent class, so the multiset of visited classes never depends on the
/// worker count.
EnumerationStats enumerate_graphs_parallel(int order, const std::function<void(int, const Graph&)>& visit,
                                           const EnumerationOptions& options = {});

}  // namespace eqdeg
