#include "eqdeg/constructions.hpp"
#include "eqdeg/enumerate.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/triangles.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqdeg;

namespace {

// Direct (v, T) incidence count and M, from vertex triples.
TriangleProfile naive_profile(const Graph& g)
{
    TriangleProfile p;
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                if (!(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)))
                    continue;
                ++p.triangles;
                for (Vertex v = 0; v < n; ++v)
                    if (v != a && v != b && v != c)
                        ++p.t[g.adjacent(v, a) + g.adjacent(v, b) + g.adjacent(v, c)];
            }
    for (auto [u, v] : g.edges()) {
        int common = 0, neither = 0;
        for (Vertex x = 0; x < n; ++x) {
            if (x == u || x == v)
                continue;
            common += g.adjacent(x, u) && g.adjacent(x, v);
            neither += !g.adjacent(x, u) && !g.adjacent(x, v);
        }
        p.book = std::max(p.book, common);
        p.weighted_sum += static_cast<std::uint64_t>(common) * neither;
    }
    return p;
}

void check_identities(const Graph& g, const TriangleProfile& p)
{
    if (g.order() >= 3)
        CHECK(p.t[0] + p.t[1] + p.t[2] + p.t[3] == p.triangles * static_cast<std::uint64_t>(g.order() - 3));
    CHECK(p.weighted_sum == p.t[1] + 3 * p.t[0]);
    CHECK(p.book <= std::max(0, g.order() - 2));
    if (p.triangles > 0)
        CHECK(p.book >= 1);
}

}  // namespace

TEST_CASE("triangle counts and book sizes")
{
    const Graph k3 = Graph(3).complement();
    const Graph k4 = Graph(4).complement();
    const Graph k5 = Graph(5).complement();
    CHECK(triangle_count(k3) == 1);
    CHECK(triangle_count(k4) == 4);
    CHECK(triangle_count(complete_bipartite(2, 3)) == 0);
    CHECK(triangle_count(tight_triangle_a(6)) == 4);
    CHECK(book_size(k4) == 2);
    CHECK(book_size(k5) == 3);
    CHECK(book_size(oracle::graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 0);
    CHECK(book_size(Graph(4)) == 0);
}

TEST_CASE("triangle profile examples")
{
    const auto k4 = triangle_profile(Graph(4).complement());
    CHECK(k4.triangles == 4);
    CHECK(k4.t == std::array<std::uint64_t, 4>{0, 0, 0, 4});
    CHECK(k4.weighted_sum == 0);

    const auto k3_plus = triangle_profile(oracle::graph_of(4, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(k3_plus.triangles == 1);
    CHECK(k3_plus.t == std::array<std::uint64_t, 4>{1, 0, 0, 0});
    CHECK(k3_plus.weighted_sum == 3);

    CHECK(triangle_profile(Graph(2).complement()) == TriangleProfile{});
}

TEST_CASE("triangle profile matches the triple-enumeration oracle on random graphs")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
        const auto p = triangle_profile(g);
        REQUIRE(p == naive_profile(g));
        CHECK(triangle_count(g) == oracle::naive_triangles(g));
        CHECK(book_size(g) == p.book);
        check_identities(g, p);
    }
}

TEST_CASE("wide rows")
{
    std::mt19937_64 rng(8);
    for (int n : {64, 65, 127, 128, 129, 150}) {
        const Graph g = oracle::random_graph(rng, n, 0.2);
        const auto p = triangle_profile(g);
        CHECK(p == naive_profile(g));
        check_identities(g, p);
    }
}

TEST_CASE("triangle statistics on every class of order at most 7")
{
    for (int n = 1; n <= 7; ++n)
        enumerate_graphs(n, [&](const Graph& g) {
            const auto p = triangle_profile(g);
            REQUIRE(p.triangles == oracle::naive_triangles(g));
            REQUIRE(triangle_count(g) == p.triangles);
            check_identities(g, p);
        });
}

TEST_CASE("find_triangle returns the first sorted triple")
{
    CHECK_FALSE(find_triangle(complete_bipartite(3, 3)));
    const auto t = find_triangle(oracle::graph_of(5, {{3, 4}, {2, 4}, {2, 3}, {0, 1}, {1, 4}, {0, 4}}));
    REQUIRE(t);
    CHECK(*t == std::array<Vertex, 3>{0, 1, 4});
}

TEST_CASE("mantel_classify examples")
{
    CHECK(mantel_classify(complete_bipartite(3, 3)).kind == MantelClass::k_nn);
    CHECK(mantel_classify(k_nn_minus(3)).kind == MantelClass::k_nn_minus);
    CHECK(mantel_classify(complete_bipartite(2, 4)).kind == MantelClass::k_n_minus_1_n_plus_1);

    const Graph a4 = tight_triangle_a(4);
    const auto c = mantel_classify(a4);
    CHECK(c.kind == MantelClass::has_triangle);
    REQUIRE(c.triangle);
    const auto [x, y, z] = *c.triangle;
    CHECK((a4.adjacent(x, y) && a4.adjacent(y, z) && a4.adjacent(x, z)));

    CHECK_THROWS_AS(mantel_classify(complete_bipartite(3, 4)), PreconditionError);
    CHECK_THROWS_AS(mantel_classify(complete_bipartite(1, 5)), PreconditionError);
    CHECK_THROWS_AS(mantel_classify(Graph(2).complement()), PreconditionError);
    CHECK(to_string(MantelClass::k_nn_minus) == "K_{n,n}^-");
}

TEST_CASE("tight constructions have exactly n - 2 triangles")
{
    for (int n = 4; n <= 20; ++n) {
        CHECK(triangle_count(tight_triangle_a(n)) == static_cast<std::uint64_t>(n - 2));
        CHECK(triangle_count(tight_triangle_b(n)) == static_cast<std::uint64_t>(n - 2));
    }
}
