#include "eqdeg/canonical.hpp"
#include "eqdeg/constructions.hpp"
#include "eqdeg/degree_paths.hpp"
#include "eqdeg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace eqdeg;

TEST_CASE("construction examples")
{
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(complete_bipartite(2, 4).edge_count() == 8);
    CHECK(complete_bipartite(1, 1).edges() == std::vector<Edge>{{0, 1}});
    CHECK(complete_bipartite(0, 3).edge_count() == 0);

    const Graph h3 = half_graph(3);
    CHECK(h3.order() == 6);
    CHECK(h3.edge_count() == 6);
    CHECK(h3.degrees() == std::vector<int>{3, 2, 1, 1, 2, 3});
    CHECK(half_graph(1).edges() == std::vector<Edge>{{0, 1}});
    const Graph h10 = half_graph(10);
    CHECK(h10.edge_count() == 55);
    CHECK_FALSE(has_equal_degree_path(h10, 2));

    const Graph g2 = modified_half_graph(2);
    CHECK(g2.edge_count() == 3);
    CHECK_FALSE(has_equal_degree_path(g2, 2));
    const Graph g4 = modified_half_graph(4);
    CHECK(g4.order() == 8);
    CHECK(g4.edge_count() == 10);
    CHECK_FALSE(has_equal_degree_path(g4, 2));
    CHECK_FALSE(is_isomorphic(g4, half_graph(4)));

    const Graph c2 = clique_union_complement(2);
    CHECK(c2.order() == 3);
    CHECK(c2.edge_count() == 2);
    CHECK(is_isomorphic(c2, oracle::graph_of(3, {{0, 1}, {1, 2}})));
    CHECK(clique_union_complement(3).edge_count() == 11);
    const Graph c4 = clique_union_complement(4);
    CHECK(c4.order() == 10);
    CHECK(c4.edge_count() == 35);
    CHECK_FALSE(has_equal_degree_path(c4, 1));

    CHECK(k_nn_minus(3).edge_count() == 8);
    CHECK_FALSE(k_nn_minus(3).adjacent(0, 3));
    CHECK(tight_triangle_a(4).order() == 8);
    CHECK(tight_triangle_a(4).edge_count() == 15);
    CHECK(tight_triangle_b(5).order() == 10);
    CHECK(tight_triangle_b(5).edge_count() == 24);
}

TEST_CASE("construction preconditions")
{
    CHECK_THROWS_AS(complete_bipartite(0, 0), InputError);
    CHECK_THROWS_AS(complete_bipartite(-1, 3), InputError);
    CHECK_THROWS_AS(half_graph(0), InputError);
    CHECK_THROWS_AS(modified_half_graph(3), InputError);
    CHECK_THROWS_AS(modified_half_graph(0), InputError);
    CHECK_THROWS_AS(clique_union_complement(0), InputError);
    CHECK_THROWS_AS(k_nn_minus(1), InputError);
    CHECK_THROWS_AS(tight_triangle_a(1), InputError);
    CHECK_THROWS_AS(tight_triangle_b(2), InputError);
}

TEST_CASE("parse_construction")
{
    CHECK(parse_construction("complete_bipartite:3,4") == ConstructionSpec{Family::complete_bipartite, {3, 4}});
    CHECK(parse_construction("half_graph:5") == ConstructionSpec{Family::half_graph, {5}});
    CHECK(to_string(parse_construction("tight_triangle_b:7")) == "tight_triangle_b:7");
    CHECK(build(parse_construction("modified_half_graph:4")) == modified_half_graph(4));

    for (const char* bad : {"", "half_graph", "half_graph:", "half_graph:x", "half_graph:3,4", "complete_bipartite:3",
                            "nope:3", "half_graph:3x", "half_graph:-1", "modified_half_graph:5", "half_graph:3,"})
        CHECK_THROWS_AS(parse_construction(bad), InputError);
}

TEST_CASE("edge-count formulas up to parameter 200")
{
    for (int p = 1; p <= 200; ++p) {
        std::vector<ConstructionSpec> specs{{Family::half_graph, {p}}, {Family::complete_bipartite, {p, p + 1}}};
        if (p % 2 == 0)
            specs.push_back({Family::modified_half_graph, {p}});
        if (p >= 2) {
            specs.push_back({Family::k_nn_minus, {p}});
            specs.push_back({Family::tight_triangle_a, {p}});
        }
        if (p >= 3)
            specs.push_back({Family::tight_triangle_b, {p}});
        if (p <= 20)
            specs.push_back({Family::clique_union_complement, {p}});
        for (const auto& spec : specs) {
            const Graph g = build(spec);
            oracle::assert_well_formed(g);
            INFO(to_string(spec));
            CHECK(g.edge_count() == expected_edge_count(spec));
        }
        const std::size_t q = static_cast<std::size_t>(p);
        CHECK(expected_edge_count({Family::half_graph, {p}}) == q * (q + 1) / 2);
    }
}

TEST_CASE("clique complement formula matches the direct count")
{
    for (int m = 1; m <= 20; ++m) {
        const long long n = static_cast<long long>(m) * (m + 1) / 2;
        // Non-edges are the edges inside the cliques.
        long long inside = 0;
        for (long long s = 1; s <= m; ++s)
            inside += s * (s - 1) / 2;
        CHECK(static_cast<long long>(clique_union_complement(m).edge_count()) == n * (n - 1) / 2 - inside);
    }
}

TEST_CASE("half graph degree multiset up to 200")
{
    for (int n = 1; n <= 200; ++n) {
        auto d = half_graph(n).degrees();
        std::sort(d.begin(), d.end());
        std::vector<int> expected;
        for (int k = 1; k <= n; ++k)
            expected.insert(expected.end(), {k, k});
        REQUIRE(d == expected);
    }
}

TEST_CASE("length-three verdicts on bipartite families up to 100")
{
    for (int n = 1; n <= 100; ++n) {
        CHECK_FALSE(has_equal_degree_p3(complete_bipartite(n, n + 1)));
        if (n >= 2) {
            CHECK(has_equal_degree_p3(complete_bipartite(n, n)));
            CHECK(has_equal_degree_p3(k_nn_minus(n)));
        }
    }
}

TEST_CASE("half graphs avoid even-length equal-degree paths up to 40")
{
    for (int k = 1; k <= 40; ++k) {
        const Graph h = half_graph(k);
        for (int len : {2, 4, 6})
            REQUIRE_FALSE(find_equal_degree_path(h, len));
    }
}

TEST_CASE("any extra edge on a half graph creates an equal-degree 2-path")
{
    for (int k = 1; k <= 15; ++k) {
        const Graph h = half_graph(k);
        for (Vertex a = 0; a < h.order(); ++a)
            for (Vertex b = a + 1; b < h.order(); ++b) {
                if (h.adjacent(a, b))
                    continue;
                const Graph plus = h.with_edge(a, b);
                const auto w = find_equal_degree_path(plus, 2);
                INFO("k=" << k << " edge " << a << "," << b);
                REQUIRE(w);
                CHECK(witness_is_valid(plus, *w, 2));
            }
    }
}

TEST_CASE("tight triangle graphs")
{
    for (int n = 3; n <= 20; ++n) {
        const Graph a = tight_triangle_a(n);
        const Graph b = tight_triangle_b(n);
        CHECK(a.order() == 2 * n);
        CHECK(b.order() == 2 * n);
        CHECK(a.edge_count() == static_cast<std::size_t>(n * n - 1));
        CHECK(b.edge_count() == static_cast<std::size_t>(n * n - 1));
    }
}
