#include "eqdeg/extremal.hpp"

#include "eqdeg/canonical.hpp"
#include "eqdeg/degree_paths.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/graph6.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>

namespace eqdeg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_arguments(int ell, int n)
{
    if (ell < 1)
        throw InputError("path length must be at least 1, got " + std::to_string(ell));
    if (n < 1)
        throw InputError("order must be at least 1, got " + std::to_string(n));
}

std::string_view mode_name(SearchMode mode)
{
    return mode == SearchMode::exhaustive ? "exhaustive" : "constructions_only";
}

void sort_unique(std::vector<std::string>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

ExtremalResult degenerate_result(int ell, int n)
{
    ExtremalResult r;
    r.ell = ell;
    r.n = n;
    r.value = static_cast<std::size_t>(n) * (n - 1) / 2;
    r.exact = true;
    r.degenerate = true;
    if (n <= kGraph6MaxOrder)
        r.witnesses.push_back(to_graph6(Graph(n).complement()));
    return r;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int ell, int n)
{
    return dir / ("p_" + std::to_string(ell) + "_" + std::to_string(n) + ".json");
}

std::optional<ExtremalResult> load_cached(const SearchConfig& config, int ell, int n)
{
    if (!config.cache_dir)
        return std::nullopt;
    std::ifstream in(cache_file(*config.cache_dir, ell, n));
    if (!in)
        return std::nullopt;
    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("version") != EQDEG_VERSION || doc.at("mode") != mode_name(config.mode))
            return std::nullopt;
        auto r = extremal_result_from_json(doc.at("result"));
        if (r.ell != ell || r.n != n)
            return std::nullopt;
        r.from_cache = true;
        return r;
    } catch (const nlohmann::json::exception&) {
        // Unreadable entries are recomputed and overwritten.
        return std::nullopt;
    }
}

void store_cached(const SearchConfig& config, const ExtremalResult& r)
{
    if (!config.cache_dir)
        return;
    std::filesystem::create_directories(*config.cache_dir);
    const auto target = cache_file(*config.cache_dir, r.ell, r.n);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        nlohmann::json doc{{"version", EQDEG_VERSION}, {"mode", mode_name(config.mode)}, {"result", to_json(r)}};
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target);
}

struct WorkerBest {
    long long edges = -1;
    std::vector<std::string> witnesses;
};

ExtremalResult exhaustive(int ell, int n, const SearchConfig& config)
{
    const EnumerationOptions options{config.method, config.workers, config.max_order};
    std::vector<WorkerBest> best(config.workers);
    const auto stats = enumerate_graphs_parallel(
        n,
        [&](int worker, const Graph& g) {
            auto& mine = best[worker];
            const auto edges = static_cast<long long>(g.edge_count());
            if (edges < mine.edges || find_equal_degree_path(g, ell))
                return;
            if (edges > mine.edges) {
                mine.edges = edges;
                mine.witnesses.clear();
            }
            mine.witnesses.push_back(to_graph6(canonical_graph(g)));
        },
        options);

    ExtremalResult r;
    r.ell = ell;
    r.n = n;
    r.exact = true;
    r.classes_enumerated = stats.classes;
    long long top = -1;
    for (const auto& b : best)
        top = std::max(top, b.edges);
    r.value = static_cast<std::size_t>(top);
    for (const auto& b : best)
        if (b.edges == top)
            r.witnesses.insert(r.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
    sort_unique(r.witnesses);
    return r;
}

}  // namespace

std::vector<ConstructionSpec> candidate_constructions(int n)
{
    std::vector<ConstructionSpec> out;
    for (int a = 0; a <= n / 2; ++a)
        out.push_back({Family::complete_bipartite, {a, n - a}});
    if (n % 2 == 0) {
        const int h = n / 2;
        if (h >= 1)
            out.push_back({Family::half_graph, {h}});
        if (h >= 2 && h % 2 == 0)
            out.push_back({Family::modified_half_graph, {h}});
        if (h >= 2) {
            out.push_back({Family::k_nn_minus, {h}});
            out.push_back({Family::tight_triangle_a, {h}});
        }
        if (h >= 3)
            out.push_back({Family::tight_triangle_b, {h}});
    }
    for (int m = 1; m * (m + 1) / 2 <= n; ++m)
        if (m * (m + 1) / 2 == n)
            out.push_back({Family::clique_union_complement, {m}});
    return out;
}

ExtremalResult lower_bound_from_constructions(int ell, int n)
{
    check_arguments(ell, n);
    const auto start = Clock::now();
    ExtremalResult r;
    r.ell = ell;
    r.n = n;
    r.degenerate = ell >= n;
    long long top = -1;
    for (const auto& spec : candidate_constructions(n)) {
        const Graph g = build(spec);
        if (find_equal_degree_path(g, ell))
            continue;
        const auto edges = static_cast<long long>(g.edge_count());
        if (edges < top)
            continue;
        if (edges > top) {
            top = edges;
            r.witnesses.clear();
            r.witness_constructions.clear();
        }
        r.witness_constructions.push_back(to_string(spec));
        if (n <= kGraph6MaxOrder)
            r.witnesses.push_back(to_graph6(canonical_graph(g)));
    }
    r.value = static_cast<std::size_t>(top);
    sort_unique(r.witnesses);
    r.wall_ms = ms_since(start);
    return r;
}

ExtremalResult compute_p(int ell, int n, const SearchConfig& config)
{
    check_arguments(ell, n);
    if (config.workers < 1)
        throw InputError("worker count must be at least 1, got " + std::to_string(config.workers));
    const auto start = Clock::now();

    ExtremalResult r;
    if (ell >= n) {
        r = degenerate_result(ell, n);
    } else if (config.mode == SearchMode::constructions_only) {
        r = lower_bound_from_constructions(ell, n);
    } else {
        check_enumeration_request(n, {config.method, config.workers, config.max_order});
        if (auto cached = load_cached(config, ell, n)) {
            r = *cached;
        } else {
            r = exhaustive(ell, n, config);
            store_cached(config, r);
        }
    }
    r.workers = config.workers;
    r.wall_ms = ms_since(start);
    return r;
}

std::size_t p1_upper_bound(int n)
{
    if (n < 1)
        throw InputError("order must be at least 1, got " + std::to_string(n));
    long long m = 1;
    while ((m + 1) * (m + 2) / 2 <= n)
        ++m;
    const long long nn = n;
    // Twelve times the bound is an integer; floor division recovers the bound.
    const long long twelve = 6 * nn * (nn - m - 1) + m * (m + 1) * (m + 2);
    return static_cast<std::size_t>(twelve / 12);
}

UniquenessReport verify_uniqueness(int ell, int n, const ConstructionSpec& expected, const SearchConfig& config)
{
    const Graph g = build(expected);
    if (g.order() != n)
        throw InputError(to_string(expected) + " has order " + std::to_string(g.order()) + ", expected " +
                         std::to_string(n));
    SearchConfig exhaustive_config = config;
    exhaustive_config.mode = SearchMode::exhaustive;

    UniquenessReport rep;
    rep.result = compute_p(ell, n, exhaustive_config);
    rep.expected = to_string(expected);
    rep.expected_graph6 = to_graph6(canonical_graph(g));
    rep.expected_edges = g.edge_count();
    rep.expected_satisfies = !find_equal_degree_path(g, ell);
    const auto& w = rep.result.witnesses;
    rep.expected_is_witness = std::binary_search(w.begin(), w.end(), rep.expected_graph6);
    rep.unique = rep.expected_is_witness && w.size() == 1;
    return rep;
}

nlohmann::json to_json(const ExtremalResult& r)
{
    return {
        {"ell", r.ell},
        {"n", r.n},
        {"value", r.value},
        {"exact", r.exact},
        {"degenerate", r.degenerate},
        {"witnesses", r.witnesses},
        {"witness_constructions", r.witness_constructions},
        {"classes_enumerated", r.classes_enumerated},
    };
}

ExtremalResult extremal_result_from_json(const nlohmann::json& j)
{
    ExtremalResult r;
    j.at("ell").get_to(r.ell);
    j.at("n").get_to(r.n);
    j.at("value").get_to(r.value);
    j.at("exact").get_to(r.exact);
    j.at("degenerate").get_to(r.degenerate);
    j.at("witnesses").get_to(r.witnesses);
    j.at("witness_constructions").get_to(r.witness_constructions);
    j.at("classes_enumerated").get_to(r.classes_enumerated);
    return r;
}

nlohmann::json to_json(const UniquenessReport& rep)
{
    return {
        {"extremal", to_json(rep.result)},
        {"expected", rep.expected},
        {"expected_graph6", rep.expected_graph6},
        {"expected_edges", rep.expected_edges},
        {"expected_satisfies", rep.expected_satisfies},
        {"expected_is_witness", rep.expected_is_witness},
        {"unique", rep.unique},
    };
}

}  // namespace eqdeg
