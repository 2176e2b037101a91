#include "eqdeg/degree_paths.hpp"

#include "eqdeg/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace eqdeg {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

// Depth-limited simple-path search with two sound prunes: BFS distance to the
// target bounds the remaining length from below, and inside a bipartite
// component every path between two vertices has fixed parity.
class PathSearcher {
public:
    explicit PathSearcher(const Graph& g)
        : g_(g), component_(g.order(), -1), side_(g.order(), 0), distances_(g.order()),
          visited_(static_cast<std::size_t>(g.row_words()), 0)
    {
        for (Vertex s = 0; s < g.order(); ++s) {
            if (component_[s] >= 0)
                continue;
            const int id = static_cast<int>(bipartite_.size());
            bool two_colorable = true;
            std::deque<Vertex> queue{s};
            component_[s] = id;
            while (!queue.empty()) {
                const Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y : g.neighbors(x)) {
                    if (component_[y] < 0) {
                        component_[y] = id;
                        side_[y] = side_[x] ^ 1;
                        queue.push_back(y);
                    } else if (side_[y] == side_[x]) {
                        two_colorable = false;
                    }
                }
            }
            bipartite_.push_back(two_colorable);
        }
    }

    bool find(Vertex u, Vertex w, int length, std::vector<Vertex>* path)
    {
        if (component_[u] != component_[w])
            return false;
        if (bipartite_[component_[u]] && ((length & 1) != (side_[u] ^ side_[w])))
            return false;
        dist_ = &distances_to(w);
        if ((*dist_)[u] > length)
            return false;

        std::fill(visited_.begin(), visited_.end(), 0);
        set_bit(visited_, u);
        set_bit(visited_, w);
        target_ = w;
        trail_.assign(1, u);
        const bool found = extend(u, length);
        if (found && path) {
            *path = trail_;
            path->push_back(w);
        }
        return found;
    }

private:
    const std::vector<int>& distances_to(Vertex w)
    {
        auto& d = distances_[w];
        if (!d.empty())
            return d;
        d.assign(g_.order(), kUnreachable);
        d[w] = 0;
        std::deque<Vertex> queue{w};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g_.neighbors(x))
                if (d[y] == kUnreachable) {
                    d[y] = d[x] + 1;
                    queue.push_back(y);
                }
        }
        return d;
    }

    bool extend(Vertex x, int remaining)
    {
        if (remaining == 1)
            return g_.adjacent(x, target_);
        auto row = g_.row(x);
        for (std::size_t k = 0; k < row.size(); ++k) {
            Word candidates = row[k] & ~visited_[k];
            while (candidates) {
                const Vertex y = static_cast<Vertex>(k * kWordBits) + std::countr_zero(candidates);
                candidates &= candidates - 1;
                if ((*dist_)[y] > remaining - 1)
                    continue;
                set_bit(visited_, y);
                trail_.push_back(y);
                if (extend(y, remaining - 1))
                    return true;
                trail_.pop_back();
                clear_bit(visited_, y);
            }
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> component_;
    std::vector<int> side_;
    std::vector<char> bipartite_;
    std::vector<std::vector<int>> distances_;
    std::vector<Word> visited_;
    std::vector<Vertex> trail_;
    const std::vector<int>* dist_ = nullptr;
    Vertex target_ = 0;
};

void check_vertex(const Graph& g, Vertex v, const char* name)
{
    if (v < 0 || v >= g.order())
        throw InputError(std::string("vertex ") + name + "=" + std::to_string(v) + " outside 0.." +
                         std::to_string(g.order() - 1));
}

void check_length(int length)
{
    if (length < 1)
        throw InputError("path length must be at least 1, got " + std::to_string(length));
}

PathWitness make_witness(const Graph& g, Vertex u, Vertex w, std::vector<Vertex> path)
{
    return PathWitness{u, w, std::move(path), g.degree(u)};
}

std::optional<PathWitness> adjacent_equal_degrees(const Graph& g)
{
    for (auto [u, w] : equal_degree_pairs(g))
        if (g.adjacent(u, w))
            return make_witness(g, u, w, {u, w});
    return std::nullopt;
}

std::optional<PathWitness> equal_degrees_with_common_neighbor(const Graph& g)
{
    for (auto [u, w] : equal_degree_pairs(g)) {
        auto ru = g.row(u);
        auto rw = g.row(w);
        for (std::size_t k = 0; k < ru.size(); ++k)
            if (Word common = ru[k] & rw[k]) {
                const Vertex x = static_cast<Vertex>(k * kWordBits) + std::countr_zero(common);
                return make_witness(g, u, w, {u, x, w});
            }
    }
    return std::nullopt;
}

}  // namespace

bool path_exists_exact(const Graph& g, Vertex u, Vertex w, int length, std::vector<Vertex>* path)
{
    check_vertex(g, u, "u");
    check_vertex(g, w, "w");
    if (u == w)
        throw InputError("path endpoints must be distinct, got u = w = " + std::to_string(u));
    check_length(length);
    if (length >= g.order())
        return false;
    return PathSearcher(g).find(u, w, length, path);
}

std::vector<Edge> equal_degree_pairs(const Graph& g)
{
    const auto deg = g.degrees();
    std::vector<std::vector<Vertex>> by_degree(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        by_degree[deg[v]].push_back(v);
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& cls = by_degree[deg[u]];
        for (auto it = std::upper_bound(cls.begin(), cls.end(), u); it != cls.end(); ++it)
            pairs.emplace_back(u, *it);
    }
    return pairs;
}

std::optional<PathWitness> has_equal_degree_path(const Graph& g, int length)
{
    check_length(length);
    if (length >= g.order())
        return std::nullopt;
    PathSearcher searcher(g);
    std::vector<Vertex> path;
    for (auto [u, w] : equal_degree_pairs(g))
        if (searcher.find(u, w, length, &path))
            return make_witness(g, u, w, std::move(path));
    return std::nullopt;
}

std::optional<PathWitness> has_equal_degree_p3(const Graph& g)
{
    if (g.order() < 4)
        return std::nullopt;
    const int words = g.row_words();
    const auto n = static_cast<std::size_t>(g.order());

    // once[w]: vertices with >= 1 neighbour in N(w); twice[w]: with >= 2.
    std::vector<Word> once(n * words, 0);
    std::vector<Word> twice(n * words, 0);
    std::vector<char> ready(n, 0);
    auto prepare = [&](Vertex w) {
        if (ready[w])
            return;
        ready[w] = 1;
        Word* o = once.data() + static_cast<std::size_t>(w) * words;
        Word* t = twice.data() + static_cast<std::size_t>(w) * words;
        for (Vertex b : g.neighbors(w)) {
            auto rb = g.row(b);
            for (int k = 0; k < words; ++k) {
                t[k] |= o[k] & rb[k];
                o[k] |= rb[k];
            }
        }
    };

    for (auto [u, w] : equal_degree_pairs(g)) {
        prepare(w);
        const bool uw = g.adjacent(u, w);
        const Word* reach = (uw ? twice.data() : once.data()) + static_cast<std::size_t>(w) * words;
        auto ru = g.row(u);
        bool hit = false;
        for (int k = 0; k < words && !hit; ++k) {
            Word x = ru[k] & reach[k];
            if (k == (w >> 6))
                x &= ~(Word{1} << (w & 63));
            hit = x != 0;
        }
        if (!hit)
            continue;

        // Lexicographically first u-a-b-w.
        auto rw = g.row(w);
        for (Vertex a : g.neighbors(u)) {
            if (a == w)
                continue;
            auto ra = g.row(a);
            for (int k = 0; k < words; ++k) {
                Word b_set = ra[k] & rw[k];
                if (k == (u >> 6))
                    b_set &= ~(Word{1} << (u & 63));
                if (b_set) {
                    const Vertex b = k * kWordBits + std::countr_zero(b_set);
                    return make_witness(g, u, w, {u, a, b, w});
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<PathWitness> find_equal_degree_path(const Graph& g, int length)
{
    check_length(length);
    if (length >= g.order())
        return std::nullopt;
    switch (length) {
    case 1:
        return adjacent_equal_degrees(g);
    case 2:
        return equal_degrees_with_common_neighbor(g);
    case 3:
        return has_equal_degree_p3(g);
    default:
        return has_equal_degree_path(g, length);
    }
}

bool witness_is_valid(const Graph& g, const PathWitness& witness, int length)
{
    const auto& p = witness.path;
    if (static_cast<int>(p.size()) != length + 1 || p.front() != witness.u || p.back() != witness.w)
        return false;
    std::vector<char> seen(g.order(), 0);
    for (Vertex v : p) {
        if (v < 0 || v >= g.order() || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1]))
            return false;
    return g.degree(witness.u) == g.degree(witness.w) && g.degree(witness.u) == witness.shared_degree;
}

}  // namespace eqdeg
