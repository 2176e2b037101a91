#include "eqdeg/canonical.hpp"

#include "eqdeg/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>

namespace eqdeg {

namespace {

template <int W>
struct Bits {
    std::array<Word, W> w{};

    void set(int i) noexcept { w[i >> 6] |= Word{1} << (i & 63); }
    bool test(int i) const noexcept { return (w[i >> 6] >> (i & 63)) & 1u; }

    int count_and(const Bits& o) const noexcept
    {
        int c = 0;
        for (int k = 0; k < W; ++k)
            c += std::popcount(w[k] & o.w[k]);
        return c;
    }

    /// Index of the lowest bit where the two differ, or -1.
    int first_difference(const Bits& o) const noexcept
    {
        for (int k = 0; k < W; ++k)
            if (Word d = w[k] ^ o.w[k])
                return k * kWordBits + std::countr_zero(d);
        return -1;
    }
};

// Cells are the half-open ranges [starts[k], starts[k+1]) of lab.
struct Partition {
    std::vector<int> lab;
    std::vector<int> starts;

    int cell_end(std::size_t k, int n) const
    {
        return k + 1 < starts.size() ? starts[k + 1] : n;
    }
    bool discrete(int n) const { return static_cast<int>(starts.size()) == n; }
};

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <int W>
class Canonicalizer {
public:
    Canonicalizer(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(n_)
    {
        for (Vertex v = 0; v < n_; ++v) {
            auto r = g.row(v);
            for (int k = 0; k < W && k < static_cast<int>(r.size()); ++k)
                adj_[v].w[k] = r[k];
        }
        root_.lab.resize(n_);
        std::iota(root_.lab.begin(), root_.lab.end(), 0);
        if (colors.empty()) {
            if (n_ > 0)
                root_.starts.push_back(0);
        } else {
            if (static_cast<int>(colors.size()) != n_)
                throw InputError("colour vector has " + std::to_string(colors.size()) + " entries for order " +
                                 std::to_string(n_));
            std::stable_sort(root_.lab.begin(), root_.lab.end(),
                             [&](int a, int b) { return colors[a] < colors[b]; });
            for (int i = 0; i < n_; ++i)
                if (i == 0 || colors[root_.lab[i]] != colors[root_.lab[i - 1]])
                    root_.starts.push_back(i);
        }
    }

    CanonicalLabeling run()
    {
        CanonicalLabeling out;
        if (n_ == 0)
            return out;
        refine(root_);
        search(root_, 0);
        out.order = best_lab_;
        out.automorphisms = std::move(automorphisms_);
        return out;
    }

private:
    void refine(Partition& p)
    {
        std::vector<int> new_starts;
        std::vector<std::pair<int, int>> keyed;
        bool changed = true;
        while (changed && !p.discrete(n_)) {
            changed = false;
            for (std::size_t s = 0; s < p.starts.size() && !p.discrete(n_); ++s) {
                Bits<W> splitter;
                for (int i = p.starts[s], e = p.cell_end(s, n_); i < e; ++i)
                    splitter.set(p.lab[i]);

                bool split = false;
                new_starts.clear();
                for (std::size_t c = 0; c < p.starts.size(); ++c) {
                    const int b = p.starts[c];
                    const int e = p.cell_end(c, n_);
                    new_starts.push_back(b);
                    if (e - b == 1)
                        continue;
                    keyed.clear();
                    bool uniform = true;
                    for (int i = b; i < e; ++i) {
                        keyed.emplace_back(adj_[p.lab[i]].count_and(splitter), p.lab[i]);
                        uniform = uniform && keyed.back().first == keyed.front().first;
                    }
                    if (uniform)
                        continue;
                    std::sort(keyed.begin(), keyed.end());
                    for (int i = b; i < e; ++i) {
                        p.lab[i] = keyed[i - b].second;
                        if (i > b && keyed[i - b].first != keyed[i - b - 1].first)
                            new_starts.push_back(i);
                    }
                    split = true;
                }
                if (split) {
                    p.starts.swap(new_starts);
                    changed = true;
                }
            }
        }
    }

    // rows[j] holds bit i (i < j) iff lab[i] ~ lab[j].
    std::vector<Bits<W>> relabeled_columns(const std::vector<int>& lab) const
    {
        std::vector<Bits<W>> cols(n_);
        for (int j = 1; j < n_; ++j) {
            const auto& r = adj_[lab[j]];
            for (int i = 0; i < j; ++i)
                if (r.test(lab[i]))
                    cols[j].set(i);
        }
        return cols;
    }

    static int compare_columns(const Bits<W>& a, const Bits<W>& b)
    {
        const int i = a.first_difference(b);
        if (i < 0)
            return 0;
        return a.test(i) ? 1 : -1;
    }

    static int compare(const std::vector<Bits<W>>& a, const std::vector<Bits<W>>& b)
    {
        for (std::size_t j = 1; j < a.size(); ++j)
            if (int c = compare_columns(a[j], b[j]))
                return c;
        return 0;
    }

    // True if the already-determined leading positions form a prefix that is
    // strictly larger than the best leaf's.
    bool prefix_worse(const Partition& p) const
    {
        int k = 0;
        while (k < static_cast<int>(p.starts.size()) && p.starts[k] == k && p.cell_end(k, n_) == k + 1)
            ++k;
        for (int j = 1; j < k; ++j) {
            Bits<W> col;
            const auto& r = adj_[p.lab[j]];
            for (int i = 0; i < j; ++i)
                if (r.test(p.lab[i]))
                    col.set(i);
            if (int c = compare_columns(col, best_cols_[j]))
                return c > 0;
        }
        return false;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
    {
        int c = 0;
        while (c < static_cast<int>(a.size()) && c < static_cast<int>(b.size()) && a[c] == b[c])
            ++c;
        return c;
    }

    int record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab,
                            const std::vector<int>& from_path)
    {
        std::vector<Vertex> gen(n_);
        for (int i = 0; i < n_; ++i)
            gen[from_lab[i]] = to_lab[i];
        automorphisms_.push_back(std::move(gen));
        return common_prefix(path_, from_path);
    }

    int leaf(const Partition& p, int depth)
    {
        auto cols = relabeled_columns(p.lab);
        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = p.lab;
            first_path_ = best_path_ = path_;
            first_cols_ = best_cols_ = std::move(cols);
            return depth - 1;
        }
        if (compare(cols, first_cols_) == 0)
            return record_automorphism(first_lab_, p.lab, first_path_);
        const int c = compare(cols, best_cols_);
        if (c == 0)
            return record_automorphism(best_lab_, p.lab, best_path_);
        if (c < 0) {
            best_lab_ = p.lab;
            best_path_ = path_;
            best_cols_ = std::move(cols);
        }
        return depth - 1;
    }

    bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored) const
    {
        DisjointSets orbits(n_);
        bool any = false;
        for (const auto& gen : automorphisms_) {
            bool fixes_path = true;
            for (Vertex x : path_)
                if (gen[x] != x) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path)
                continue;
            any = true;
            for (int x = 0; x < n_; ++x)
                orbits.unite(x, gen[x]);
        }
        if (!any)
            return false;
        const int root = orbits.find(v);
        for (Vertex u : explored)
            if (orbits.find(u) == root)
                return true;
        return false;
    }

    // Returns the depth of the ancestor at which the search resumes.
    int search(const Partition& p, int depth)
    {
        if (p.discrete(n_))
            return leaf(p, depth);
        if (!first_lab_.empty() && prefix_worse(p))
            return depth - 1;

        std::size_t target = 0;
        while (p.cell_end(target, n_) - p.starts[target] == 1)
            ++target;
        const int b = p.starts[target];
        const int e = p.cell_end(target, n_);
        std::vector<Vertex> cell(p.lab.begin() + b, p.lab.begin() + e);
        std::sort(cell.begin(), cell.end());

        std::vector<Vertex> explored;
        for (Vertex v : cell) {
            if (!explored.empty() && equivalent_to_explored(v, explored))
                continue;
            explored.push_back(v);

            Partition child = p;
            auto pos = std::find(child.lab.begin() + b, child.lab.begin() + e, v);
            std::rotate(child.lab.begin() + b, pos, pos + 1);
            child.starts.insert(child.starts.begin() + static_cast<std::ptrdiff_t>(target) + 1, b + 1);
            refine(child);

            path_.push_back(v);
            const int resume = search(child, depth + 1);
            path_.pop_back();
            if (resume < depth)
                return resume;
        }
        return depth - 1;
    }

    int n_;
    std::vector<Bits<W>> adj_;
    Partition root_;
    std::vector<int> path_;
    std::vector<int> first_lab_, first_path_, best_lab_, best_path_;
    std::vector<Bits<W>> first_cols_, best_cols_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

template <int W>
CanonicalLabeling run_with(const Graph& g, std::span<const int> colors)
{
    return Canonicalizer<W>(g, colors).run();
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors)
{
    const int n = g.order();
    if (n <= 64)
        return run_with<1>(g, colors);
    if (n <= 128)
        return run_with<2>(g, colors);
    if (n <= 256)
        return run_with<4>(g, colors);
    if (n <= 512)
        return run_with<8>(g, colors);
    if (n <= 1024)
        return run_with<16>(g, colors);
    if (n <= 2048)
        return run_with<32>(g, colors);
    throw CapacityError("canonical labeling supports at most 2048 vertices, got " + std::to_string(n));
}

Graph apply_labeling(const Graph& g, std::span<const Vertex> order)
{
    std::vector<Vertex> perm(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        perm[order[i]] = static_cast<Vertex>(i);
    return g.relabeled(perm);
}

Graph canonical_graph(const Graph& g)
{
    return apply_labeling(g, canonical_labeling(g).order);
}

CanonicalForm canonical_form(const Graph& g)
{
    const auto lab = canonical_labeling(g).order;
    const int n = g.order();
    CanonicalForm f;
    f.order = n;
    const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    f.bytes.assign((bits + 7) / 8, 0);
    std::size_t t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.adjacent(lab[i], lab[j]))
                f.bytes[t >> 3] |= static_cast<std::uint8_t>(0x80u >> (t & 7));
    return f;
}

bool is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    auto dg = g.degrees();
    auto dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical_form(g) == canonical_form(h);
}

bool same_orbit(const Graph& g, Vertex a, Vertex b)
{
    if (a == b)
        return true;
    if (g.degree(a) != g.degree(b))
        return false;
    std::vector<int> ca(g.order(), 0);
    std::vector<int> cb(g.order(), 0);
    ca[a] = 1;
    cb[b] = 1;
    const auto la = canonical_labeling(g, ca).order;
    const auto lb = canonical_labeling(g, cb).order;
    const int n = g.order();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(la[i], la[j]) != g.adjacent(lb[i], lb[j]))
                return false;
    return true;
}

std::uint64_t code_of(const Graph& g, std::span<const Vertex> order)
{
    const int n = g.order();
    if (n > kMaxCodeOrder)
        throw CapacityError("packed canonical codes support at most " + std::to_string(kMaxCodeOrder) +
                            " vertices, got " + std::to_string(n));
    const int total = n * (n - 1) / 2;
    std::uint64_t code = 0;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.adjacent(order[i], order[j]))
                code |= std::uint64_t{1} << (total - 1 - t);
    return code;
}

std::uint64_t canonical_code(const Graph& g)
{
    return code_of(g, canonical_labeling(g).order);
}

Graph graph_from_code(int order, std::uint64_t code)
{
    if (order > kMaxCodeOrder)
        throw CapacityError("packed canonical codes support at most " + std::to_string(kMaxCodeOrder) +
                            " vertices, got " + std::to_string(order));
    GraphBuilder b(order);
    const int total = order * (order - 1) / 2;
    int t = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((code >> (total - 1 - t)) & 1u)
                b.add_edge(i, j);
    return std::move(b).build();
}

}  // namespace eqdeg
