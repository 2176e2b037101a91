#include "eqdeg/graph.hpp"

#include "eqdeg/errors.hpp"

#include <string>

namespace eqdeg {

namespace {

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int order)
{
    if (order < 0)
        throw InputError("graph order must be non-negative, got " + std::to_string(order));
    order_ = order;
    words_ = row_words_for(order);
    bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges)
{
    GraphBuilder b(order);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

void Graph::set(Vertex u, Vertex v, bool on) noexcept
{
    auto ru = std::span<Word>(bits_.data() + static_cast<std::size_t>(u) * words_, words_);
    auto rv = std::span<Word>(bits_.data() + static_cast<std::size_t>(v) * words_, words_);
    if (on) {
        set_bit(ru, v);
        set_bit(rv, u);
    } else {
        clear_bit(ru, v);
        clear_bit(rv, u);
    }
}

int Graph::degree(Vertex v) const noexcept
{
    return popcount(row(v));
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d(order_);
    for (Vertex v = 0; v < order_; ++v)
        d[v] = degree(v);
    return d;
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t total = 0;
    for (Word w : bits_)
        total += std::popcount(w);
    return total / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v = u + 1; v < order_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Word w = r[i];
        while (w) {
            out.push_back(static_cast<int>(i * kWordBits) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

Graph Graph::complement() const
{
    Graph g(order_);
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v = u + 1; v < order_; ++v)
            if (!adjacent(u, v))
                g.set(u, v, true);
    return g;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    return GraphBuilder(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const
{
    return GraphBuilder(*this).remove_edge(u, v).build();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != order_)
        throw InputError("relabeling has " + std::to_string(perm.size()) + " entries for a graph of order " +
                         std::to_string(order_));
    std::vector<char> seen(order_, 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= order_ || seen[p])
            throw InputError("relabeling is not a permutation");
        seen[p] = 1;
    }
    Graph g(order_);
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v = u + 1; v < order_; ++v)
            if (adjacent(u, v))
                g.set(perm[u], perm[v], true);
    return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                g.set(static_cast<int>(i), static_cast<int>(j), true);
    return g;
}

bool Graph::is_subgraph_of(const Graph& other) const
{
    if (order_ != other.order_)
        return false;
    for (Vertex u = 0; u < order_; ++u) {
        auto a = row(u);
        auto b = other.row(u);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i])
                return false;
    }
    return true;
}

void GraphBuilder::check(Vertex u, Vertex v) const
{
    const int n = graph_.order();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("edge " + pair_text(u, v) + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
        throw InputError("edge " + pair_text(u, v) + " is a loop");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u, v);
    graph_.set(u, v, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check(u, v);
    graph_.set(u, v, false);
    return *this;
}

}  // namespace eqdeg
