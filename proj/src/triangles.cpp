#include "eqdeg/triangles.hpp"

#include "eqdeg/canonical.hpp"
#include "eqdeg/constructions.hpp"
#include "eqdeg/errors.hpp"

#include <string>
#include <vector>

namespace eqdeg {

namespace {

// Row of v restricted to vertices other than those in `skip`.
std::vector<Word> masked_row(const Graph& g, Vertex v, std::initializer_list<Vertex> skip)
{
    auto r = g.row(v);
    std::vector<Word> out(r.begin(), r.end());
    for (Vertex s : skip)
        clear_bit(out, s);
    return out;
}

}  // namespace

std::uint64_t triangle_count(const Graph& g)
{
    std::uint64_t sum = 0;
    for (auto [u, v] : g.edges())
        sum += popcount_and(g.row(u), g.row(v));
    return sum / 3;
}

int book_size(const Graph& g)
{
    int best = 0;
    for (auto [u, v] : g.edges())
        best = std::max(best, popcount_and(g.row(u), g.row(v)));
    return best;
}

TriangleProfile triangle_profile(const Graph& g)
{
    TriangleProfile p;
    const int n = g.order();
    if (n < 3)
        return p;
    const int words = g.row_words();

    std::vector<Word> all(words, 0);
    for (Vertex v = 0; v < n; ++v)
        set_bit(all, v);

    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u);
        auto rv = g.row(v);
        int common = 0;
        int neither = 0;
        for (int k = 0; k < words; ++k) {
            common += std::popcount(ru[k] & rv[k]);
            // u ∈ N(v) and v ∈ N(u), so both endpoints drop out here.
            neither += std::popcount(all[k] & ~ru[k] & ~rv[k]);
        }
        p.book = std::max(p.book, common);
        p.weighted_sum += static_cast<std::uint64_t>(common) * neither;

        // Enumerate each triangle once, from its lexicographically smallest edge.
        std::vector<Vertex> apexes;
        for (int k = 0; k < words; ++k)
            for (Word c = ru[k] & rv[k]; c; c &= c - 1)
                if (const Vertex w = k * kWordBits + std::countr_zero(c); w > v)
                    apexes.push_back(w);
        for (Vertex w : apexes) {
            ++p.triangles;
            auto a = masked_row(g, u, {v, w});
            auto b = masked_row(g, v, {u, w});
            auto c = masked_row(g, w, {u, v});
            std::uint64_t one = 0, two = 0, three = 0;
            for (int k = 0; k < words; ++k) {
                const Word all3 = a[k] & b[k] & c[k];
                const Word at_least2 = (a[k] & b[k]) | (a[k] & c[k]) | (b[k] & c[k]);
                const Word odd = a[k] ^ b[k] ^ c[k];
                three += std::popcount(all3);
                two += std::popcount(at_least2 & ~all3);
                one += std::popcount(odd & ~all3);
            }
            p.t[3] += three;
            p.t[2] += two;
            p.t[1] += one;
            p.t[0] += static_cast<std::uint64_t>(n - 3) - one - two - three;
        }
    }
    return p;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g)
{
    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u);
        auto rv = g.row(v);
        for (std::size_t k = 0; k < ru.size(); ++k) {
            // Restrict to w > v so the triple comes out sorted.
            Word common = ru[k] & rv[k];
            while (common) {
                const Vertex w = static_cast<Vertex>(k * kWordBits) + std::countr_zero(common);
                common &= common - 1;
                if (w > v)
                    return std::array<Vertex, 3>{u, v, w};
            }
        }
    }
    return std::nullopt;
}

std::string_view to_string(MantelClass c)
{
    switch (c) {
    case MantelClass::k_n_minus_1_n_plus_1:
        return "K_{n-1,n+1}";
    case MantelClass::k_nn_minus:
        return "K_{n,n}^-";
    case MantelClass::k_nn:
        return "K_{n,n}";
    case MantelClass::has_triangle:
        return "has_triangle";
    case MantelClass::unclassified:
        return "unclassified";
    }
    return "unclassified";
}

MantelClassification mantel_classify(const Graph& g)
{
    const int order = g.order();
    if (order < 4 || order % 2 != 0)
        throw PreconditionError("mantel_classify needs an even order of at least 4, got " + std::to_string(order));
    const int n = order / 2;
    const auto needed = static_cast<std::size_t>(n) * n - 1;
    if (g.edge_count() < needed)
        throw PreconditionError("mantel_classify needs at least " + std::to_string(needed) + " edges, got " +
                                std::to_string(g.edge_count()));

    if (auto tri = find_triangle(g))
        return {MantelClass::has_triangle, tri};

    const std::pair<MantelClass, Graph> candidates[] = {
        {MantelClass::k_n_minus_1_n_plus_1, complete_bipartite(n - 1, n + 1)},
        {MantelClass::k_nn_minus, k_nn_minus(n)},
        {MantelClass::k_nn, complete_bipartite(n, n)},
    };
    for (const auto& [kind, model] : candidates)
        if (is_isomorphic(g, model))
            return {kind, std::nullopt};
    return {MantelClass::unclassified, std::nullopt};
}

}  // namespace eqdeg
