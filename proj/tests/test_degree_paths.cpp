#include "eqdeg/canonical.hpp"
#include "eqdeg/constructions.hpp"
#include "eqdeg/degree_paths.hpp"
#include "eqdeg/enumerate.hpp"
#include "eqdeg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqdeg;

namespace {

// Brute-force verdict: any equal-degree pair joined by an exact-length path.
bool oracle_has_path(const Graph& g, int len)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w)
            if (g.degree(u) == g.degree(w) && len < g.order() && oracle::simple_path_by_enumeration(g, u, w, len))
                return true;
    return false;
}

void check_witness(const Graph& g, const std::optional<PathWitness>& w, int len)
{
    if (!w)
        return;
    REQUIRE(witness_is_valid(g, *w, len));
    CHECK(w->length() == len);
    CHECK(w->u < w->w);
    CHECK(g.degree(w->u) == w->shared_degree);
    CHECK(g.degree(w->w) == w->shared_degree);
}

}  // namespace

TEST_CASE("path_exists_exact on small graphs")
{
    const Graph k3 = Graph(3).complement();
    std::vector<Vertex> path;
    CHECK(path_exists_exact(k3, 0, 2, 2, &path));
    CHECK(path == std::vector<Vertex>{0, 1, 2});
    CHECK(path_exists_exact(k3, 0, 1, 1));
    CHECK_FALSE(path_exists_exact(k3, 0, 1, 3));

    const Graph k23 = complete_bipartite(2, 3);
    CHECK(path_exists_exact(k23, 0, 2, 3));
    CHECK_FALSE(path_exists_exact(k23, 0, 1, 3));
    CHECK_FALSE(path_exists_exact(k23, 2, 3, 3));
    CHECK(path_exists_exact(k23, 2, 3, 2));

    CHECK_THROWS_AS(path_exists_exact(k23, 1, 1, 2), InputError);
    CHECK_THROWS_AS(path_exists_exact(k23, 0, 5, 2), InputError);
    CHECK_THROWS_AS(path_exists_exact(k23, 0, 1, 0), InputError);
}

TEST_CASE("path_exists_exact agrees with exhaustive sequence enumeration")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const Vertex u = static_cast<Vertex>(rng() % n);
        Vertex w = static_cast<Vertex>(rng() % n);
        if (u == w)
            w = (w + 1) % n;
        for (int len = 1; len < n; ++len) {
            std::vector<Vertex> path;
            const bool found = path_exists_exact(g, u, w, len, &path);
            CHECK(found == oracle::simple_path_by_enumeration(g, u, w, len));
            if (found) {
                CHECK(static_cast<int>(path.size()) == len + 1);
                CHECK(path.front() == u);
                CHECK(path.back() == w);
                // Degrees may differ here, so only the path shape is checked.
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    CHECK(g.adjacent(path[i], path[i + 1]));
            }
        }
    }
}

TEST_CASE("equal_degree_pairs")
{
    CHECK(equal_degree_pairs(complete_bipartite(1, 3)) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(equal_degree_pairs(half_graph(3)) == std::vector<Edge>{{0, 5}, {1, 4}, {2, 3}});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        CHECK_FALSE(equal_degree_pairs(oracle::random_graph(rng, n, 0.4)).empty());
    }
}

TEST_CASE("equal-degree path examples")
{
    CHECK_FALSE(has_equal_degree_path(complete_bipartite(3, 4), 3));
    const auto k33 = has_equal_degree_path(complete_bipartite(3, 3), 3);
    REQUIRE(k33);
    check_witness(complete_bipartite(3, 3), k33, 3);
    CHECK(k33->path == std::vector<Vertex>{0, 4, 1, 3});

    const Graph h4 = half_graph(4);
    CHECK_FALSE(has_equal_degree_path(h4, 2));
    CHECK_FALSE(has_equal_degree_path(h4, 4));

    const Graph minus = k_nn_minus(3);
    const auto w = has_equal_degree_path(minus, 3);
    REQUIRE(w);
    check_witness(minus, w, 3);

    CHECK_FALSE(has_equal_degree_path(Graph(3).complement(), 3));
    CHECK_FALSE(has_equal_degree_path(Graph(1), 1));
    CHECK_THROWS_AS(has_equal_degree_path(h4, 0), InputError);
}

TEST_CASE("general search matches brute force on every labeled graph of order at most 5")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::all_labeled_graphs(n))
            for (int len = 1; len <= 4; ++len) {
                const auto w = has_equal_degree_path(g, len);
                REQUIRE(w.has_value() == oracle_has_path(g, len));
                check_witness(g, w, len);
            }
}

TEST_CASE("length-three fast path matches the general search exhaustively")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::all_labeled_graphs(n))
            REQUIRE(has_equal_degree_p3(g) == has_equal_degree_path(g, 3));
    std::size_t classes = 0;
    enumerate_graphs(7, [&](const Graph& g) {
        ++classes;
        REQUIRE(has_equal_degree_p3(g) == has_equal_degree_path(g, 3));
    });
    CHECK(classes == 1044);
}

TEST_CASE("length-three fast path matches the general search on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const double p = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
        const Graph g = oracle::random_graph(rng, n, p);
        const auto fast = has_equal_degree_p3(g);
        REQUIRE(fast == has_equal_degree_path(g, 3));
        check_witness(g, fast, 3);
    }
}

TEST_CASE("dispatcher agrees with the general search")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
        for (int len = 1; len <= 6; ++len) {
            const auto w = find_equal_degree_path(g, len);
            REQUIRE(w == has_equal_degree_path(g, len));
            check_witness(g, w, len);
        }
    }
}

TEST_CASE("bipartite parity: unequal parts never join equal degrees by an odd path")
{
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b) {
            if (a == b)
                continue;
            const Graph g = complete_bipartite(a, b);
            for (int len : {1, 3, 5})
                CHECK_FALSE(find_equal_degree_path(g, len));
        }
}

TEST_CASE("the property is not monotone")
{
    const Graph k33 = complete_bipartite(3, 3);
    const Graph k34 = complete_bipartite(3, 4);
    const auto edges = k33.edges();
    CHECK(Graph::from_edges(7, edges).is_subgraph_of(k34));
    CHECK(has_equal_degree_path(k33, 3));
    CHECK_FALSE(has_equal_degree_path(k34, 3));
}

TEST_CASE("verdicts are invariant under relabeling")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const Graph h = g.relabeled(oracle::random_permutation(rng, n));
        for (int len = 1; len <= 5; ++len)
            CHECK(find_equal_degree_path(g, len).has_value() == find_equal_degree_path(h, len).has_value());
    }
}

TEST_CASE("witness_is_valid rejects malformed witnesses")
{
    const Graph g = complete_bipartite(3, 3);
    const auto w = has_equal_degree_path(g, 3);
    REQUIRE(w);
    CHECK(witness_is_valid(g, *w, 3));
    CHECK_FALSE(witness_is_valid(g, *w, 2));
    auto repeated = *w;
    repeated.path = {0, 3, 0, 4};
    CHECK_FALSE(witness_is_valid(g, repeated, 3));
    auto wrong_degree = *w;
    wrong_degree.shared_degree = 2;
    CHECK_FALSE(witness_is_valid(g, wrong_degree, 3));
    auto non_edge = *w;
    non_edge.path = {0, 1, 3, 4};
    non_edge.w = 4;
    CHECK_FALSE(witness_is_valid(g, non_edge, 3));
}

TEST_CASE("large complete bipartite graphs")
{
    CHECK_FALSE(has_equal_degree_p3(complete_bipartite(200, 201)));
    const Graph balanced = complete_bipartite(300, 300);
    const auto w = has_equal_degree_p3(balanced);
    REQUIRE(w);
    check_witness(balanced, w, 3);
}
