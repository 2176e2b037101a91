#include "eqdeg/constructions.hpp"

#include "eqdeg/errors.hpp"

#include <array>
#include <charconv>

namespace eqdeg {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

std::string num(int v) { return std::to_string(v); }

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilies{{
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::half_graph, "half_graph"},
    {Family::modified_half_graph, "modified_half_graph"},
    {Family::clique_union_complement, "clique_union_complement"},
    {Family::k_nn_minus, "k_nn_minus"},
    {Family::tight_triangle_a, "tight_triangle_a"},
    {Family::tight_triangle_b, "tight_triangle_b"},
}};

std::size_t arity(Family f) { return f == Family::complete_bipartite ? 2 : 1; }

void validate(const ConstructionSpec& spec)
{
    const auto name = std::string(family_name(spec.family));
    require(spec.params.size() == arity(spec.family),
            name + " takes " + num(static_cast<int>(arity(spec.family))) + " parameter(s)");
    const int p = spec.params[0];
    switch (spec.family) {
    case Family::complete_bipartite:
        require(p >= 0 && spec.params[1] >= 0, "complete_bipartite part sizes must be non-negative");
        require(p + spec.params[1] >= 1, "complete_bipartite needs at least one vertex");
        break;
    case Family::half_graph:
        require(p >= 1, "half_graph needs n >= 1, got " + num(p));
        break;
    case Family::modified_half_graph:
        require(p >= 2 && p % 2 == 0, "modified_half_graph needs an even n >= 2, got " + num(p));
        break;
    case Family::clique_union_complement:
        require(p >= 1, "clique_union_complement needs m >= 1, got " + num(p));
        break;
    case Family::k_nn_minus:
    case Family::tight_triangle_a:
        require(p >= 2, name + " needs n >= 2, got " + num(p));
        break;
    case Family::tight_triangle_b:
        require(p >= 3, "tight_triangle_b needs n >= 3, got " + num(p));
        break;
    }
}

}  // namespace

Graph complete_bipartite(int a, int b)
{
    validate({Family::complete_bipartite, {a, b}});
    GraphBuilder g(a + b);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = a; j < a + b; ++j)
            g.add_edge(i, j);
    return std::move(g).build();
}

Graph half_graph(int n)
{
    validate({Family::half_graph, {n}});
    GraphBuilder g(2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            g.add_edge(i - 1, n + j - 1);
    return std::move(g).build();
}

Graph modified_half_graph(int n)
{
    validate({Family::modified_half_graph, {n}});
    auto u = [](int i) { return i - 1; };
    auto v = [n](int j) { return n + j - 1; };
    const int h = n / 2;
    GraphBuilder g(half_graph(n));
    g.remove_edge(u(h), v(h));
    g.remove_edge(u(h + 1), v(h + 1));
    g.add_edge(u(h), u(h + 1));
    g.add_edge(v(h), v(h + 1));
    return std::move(g).build();
}

Graph clique_union_complement(int m)
{
    validate({Family::clique_union_complement, {m}});
    GraphBuilder cliques(m * (m + 1) / 2);
    int base = 0;
    for (int size = 1; size <= m; ++size) {
        for (int a = base; a < base + size; ++a)
            for (int b = a + 1; b < base + size; ++b)
                cliques.add_edge(a, b);
        base += size;
    }
    return std::move(cliques).build().complement();
}

Graph k_nn_minus(int n)
{
    validate({Family::k_nn_minus, {n}});
    return complete_bipartite(n, n).without_edge(0, n);
}

Graph tight_triangle_a(int n)
{
    validate({Family::tight_triangle_a, {n}});
    const Vertex x = n - 1;
    const Vertex y = n;
    GraphBuilder g(complete_bipartite(n - 1, n + 1));
    g.add_edge(x, y);
    g.remove_edge(0, x);
    return std::move(g).build();
}

Graph tight_triangle_b(int n)
{
    validate({Family::tight_triangle_b, {n}});
    GraphBuilder g(complete_bipartite(n, n));
    g.add_edge(0, 1);
    g.remove_edge(0, n);
    g.remove_edge(0, n + 1);
    return std::move(g).build();
}

std::string_view family_name(Family f)
{
    for (auto [fam, name] : kFamilies)
        if (fam == f)
            return name;
    return "unknown";
}

ConstructionSpec parse_construction(std::string_view text)
{
    const auto colon = text.find(':');
    require(colon != std::string_view::npos,
            "construction '" + std::string(text) + "' must look like family:p1[,p2]");
    const auto name = text.substr(0, colon);
    ConstructionSpec spec;
    bool known = false;
    for (auto [fam, fam_name] : kFamilies)
        if (fam_name == name) {
            spec.family = fam;
            known = true;
        }
    require(known, "unknown construction family '" + std::string(name) + "'");

    auto rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        require(ec == std::errc{} && ptr == token.data() + token.size() && !token.empty(),
                "construction parameter '" + std::string(token) + "' is not an integer");
        spec.params.push_back(value);
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    validate(spec);
    return spec;
}

std::string to_string(const ConstructionSpec& spec)
{
    std::string out(family_name(spec.family));
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        out += (i == 0 ? ":" : ",") + num(spec.params[i]);
    return out;
}

Graph build(const ConstructionSpec& spec)
{
    validate(spec);
    const int p = spec.params[0];
    switch (spec.family) {
    case Family::complete_bipartite:
        return complete_bipartite(p, spec.params[1]);
    case Family::half_graph:
        return half_graph(p);
    case Family::modified_half_graph:
        return modified_half_graph(p);
    case Family::clique_union_complement:
        return clique_union_complement(p);
    case Family::k_nn_minus:
        return k_nn_minus(p);
    case Family::tight_triangle_a:
        return tight_triangle_a(p);
    case Family::tight_triangle_b:
        return tight_triangle_b(p);
    }
    throw InputError("unknown construction family");
}

std::size_t expected_edge_count(const ConstructionSpec& spec)
{
    validate(spec);
    const auto p = static_cast<std::size_t>(spec.params[0]);
    switch (spec.family) {
    case Family::complete_bipartite:
        return p * static_cast<std::size_t>(spec.params[1]);
    case Family::half_graph:
    case Family::modified_half_graph:
        return p * (p + 1) / 2;
    case Family::clique_union_complement: {
        // n(n-m-1)/2 + m(m+1)(m+2)/12 with n = m(m+1)/2, always integral here
        const auto m = static_cast<long long>(p);
        const long long n = m * (m + 1) / 2;
        return static_cast<std::size_t>((6 * n * (n - m - 1) + m * (m + 1) * (m + 2)) / 12);
    }
    case Family::k_nn_minus:
    case Family::tight_triangle_a:
    case Family::tight_triangle_b:
        return p * p - 1;
    }
    return 0;
}

}  // namespace eqdeg
