#include "eqdeg/enumerate.hpp"

#include "eqdeg/canonical.hpp"
#include "eqdeg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>

namespace eqdeg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Fn>
void run_workers(int workers, Fn&& fn)
{
    if (workers == 1) {
        fn(0);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
            try {
                fn(t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : threads)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Every graph obtained from `parent` by adding vertex k = parent.order()
// joined to an arbitrary subset of the old vertices.
template <class Fn>
void for_each_child(const Graph& parent, Fn&& fn)
{
    const int k = parent.order();
    GraphBuilder base(k + 1);
    for (auto [u, v] : parent.edges())
        base.add_edge(u, v);
    const Graph start = std::move(base).build();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        GraphBuilder b(start);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1)
                b.add_edge(i, k);
        fn(std::move(b).build());
    }
}

bool orbit_contains(const std::vector<std::vector<Vertex>>& generators, int n, Vertex a, Vertex b)
{
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& gen : generators)
        for (Vertex v = 0; v < n; ++v)
            parent[find(v)] = find(gen[v]);
    return find(a) == find(b);
}

// Canonical code of `child` if the added vertex is in the orbit of the vertex
// the canonical labeling puts last; nullopt otherwise.
std::optional<std::uint64_t> accepted_code(const Graph& child)
{
    const int n = child.order();
    const Vertex added = n - 1;
    const auto lab = canonical_labeling(child);
    const Vertex last = lab.order.back();
    if (last != added) {
        if (child.degree(last) != child.degree(added))
            return std::nullopt;
        if (!orbit_contains(lab.automorphisms, n, last, added) && !same_orbit(child, last, added))
            return std::nullopt;
    }
    return code_of(child, lab.order);
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::vector<std::uint64_t>>& parts)
{
    std::vector<std::uint64_t> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Classes of order k + 1 from the classes of order k.
std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents, int k, const EnumerationOptions& opt,
                                      std::uint64_t& candidates)
{
    const int workers = opt.workers;
    std::vector<std::vector<std::uint64_t>> found(workers);
    std::atomic<std::uint64_t> examined{0};
    run_workers(workers, [&](int t) {
        std::uint64_t local_examined = 0;
        if (opt.method == EnumerationMethod::levelwise) {
            std::unordered_set<std::uint64_t> seen;
            for (std::size_t i = t; i < parents.size(); i += workers)
                for_each_child(graph_from_code(k, parents[i]), [&](const Graph& child) {
                    ++local_examined;
                    seen.insert(canonical_code(child));
                });
            found[t].assign(seen.begin(), seen.end());
        } else {
            for (std::size_t i = t; i < parents.size(); i += workers) {
                std::unordered_set<std::uint64_t> siblings;
                for_each_child(graph_from_code(k, parents[i]), [&](const Graph& child) {
                    ++local_examined;
                    if (auto code = accepted_code(child))
                        siblings.insert(*code);
                });
                found[t].insert(found[t].end(), siblings.begin(), siblings.end());
            }
        }
        examined += local_examined;
    });
    candidates = examined;
    return sorted_unique(found);
}

std::vector<std::uint64_t> level(int order, const EnumerationOptions& opt, std::uint64_t& candidates)
{
    std::vector<std::uint64_t> codes{0};
    candidates = 1;
    for (int k = 1; k < order; ++k)
        codes = next_level(codes, k, opt, candidates);
    return codes;
}

}  // namespace

void check_enumeration_request(int order, const EnumerationOptions& options)
{
    if (order < 1)
        throw InputError("enumeration order must be at least 1, got " + std::to_string(order));
    if (options.workers < 1)
        throw InputError("worker count must be at least 1, got " + std::to_string(options.workers));
    const int ceiling = std::min(options.max_order, kExhaustiveOrderLimit);
    if (order > ceiling)
        throw CapacityError("exhaustive enumeration is limited to " + std::to_string(ceiling) +
                            " vertices; order " + std::to_string(order) +
                            " is out of range (use constructions-only mode for larger orders)");
}

std::vector<std::uint64_t> enumerate_class_codes(int order, const EnumerationOptions& options,
                                                 EnumerationStats* stats)
{
    check_enumeration_request(order, options);
    const auto start = Clock::now();
    std::uint64_t candidates = 0;
    auto codes = level(order, options, candidates);
    if (stats)
        *stats = {order, codes.size(), candidates, ms_since(start)};
    return codes;
}

EnumerationStats enumerate_graphs(int order, const std::function<void(const Graph&)>& visit,
                                  const EnumerationOptions& options)
{
    check_enumeration_request(order, options);
    const auto start = Clock::now();
    EnumerationStats stats{order, 0, 0, 0};
    if (options.method == EnumerationMethod::canonical_augmentation && options.workers == 1 && order > 1) {
        std::uint64_t ignored = 0;
        const auto parents = level(order - 1, options, ignored);
        for (auto code : parents) {
            std::unordered_set<std::uint64_t> siblings;
            for_each_child(graph_from_code(order - 1, code), [&](const Graph& child) {
                ++stats.candidates;
                if (auto c = accepted_code(child); c && siblings.insert(*c).second) {
                    ++stats.classes;
                    visit(child);
                }
            });
        }
    } else {
        for (auto code : level(order, options, stats.candidates)) {
            ++stats.classes;
            visit(graph_from_code(order, code));
        }
    }
    stats.wall_ms = ms_since(start);
    return stats;
}

EnumerationStats enumerate_graphs_parallel(int order, const std::function<void(int, const Graph&)>& visit,
                                           const EnumerationOptions& options)
{
    check_enumeration_request(order, options);
    const auto start = Clock::now();
    const int workers = options.workers;
    EnumerationStats stats{order, 0, 0, 0};
    std::atomic<std::uint64_t> classes{0};
    std::atomic<std::uint64_t> candidates{0};

    if (options.method == EnumerationMethod::canonical_augmentation && order > 1) {
        std::uint64_t ignored = 0;
        const auto parents = level(order - 1, options, ignored);
        run_workers(workers, [&](int t) {
            std::uint64_t local_classes = 0, local_candidates = 0;
            for (std::size_t i = t; i < parents.size(); i += workers) {
                std::unordered_set<std::uint64_t> siblings;
                for_each_child(graph_from_code(order - 1, parents[i]), [&](const Graph& child) {
                    ++local_candidates;
                    if (auto c = accepted_code(child); c && siblings.insert(*c).second) {
                        ++local_classes;
                        visit(t, child);
                    }
                });
            }
            classes += local_classes;
            candidates += local_candidates;
        });
    } else {
        std::uint64_t examined = 0;
        const auto codes = level(order, options, examined);
        candidates = examined;
        classes = codes.size();
        run_workers(workers, [&](int t) {
            for (std::size_t i = t; i < codes.size(); i += workers)
                visit(t, graph_from_code(order, codes[i]));
        });
    }
    stats.classes = classes;
    stats.candidates = candidates;
    stats.wall_ms = ms_since(start);
    return stats;
}

}  // namespace eqdeg
