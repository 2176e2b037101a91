#include "eqdeg/canonical.hpp"
#include "eqdeg/constructions.hpp"
#include "eqdeg/degree_paths.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/extremal.hpp"
#include "eqdeg/graph6.hpp"
#include "eqdeg/report.hpp"
#include "eqdeg/reproduce.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace eqdeg;

namespace {

enum Exit : int {
    ok = 0,
    expectation_failed = 1,
    bad_input = 2,
    capacity = 3,
    failure = 4,
};

constexpr std::uint64_t kDefaultSeed = 1729;

struct Globals {
    int workers = 1;
    std::string cache;
    std::string json;
    std::string csv;
    std::uint64_t seed = kDefaultSeed;
    std::string method = "levelwise";
};

struct NamedGraph {
    std::string label;
    Graph graph;
};

SearchConfig search_config(const Globals& g, bool constructions_only)
{
    SearchConfig c;
    c.workers = g.workers;
    c.mode = constructions_only ? SearchMode::constructions_only : SearchMode::exhaustive;
    c.method = g.method == "augmentation" ? EnumerationMethod::canonical_augmentation : EnumerationMethod::levelwise;
    if (!g.cache.empty())
        c.cache_dir = g.cache;
    return c;
}

nlohmann::json global_params(const Globals& g)
{
    return {{"workers", g.workers}, {"seed", g.seed}, {"method", g.method}};
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Graph parse_graph6(const std::string& text, const std::string& where)
{
    try {
        return from_graph6(text);
    } catch (const FormatError& e) {
        throw InputError(where + ": " + e.what());
    }
}

std::vector<NamedGraph> load_inputs(const std::vector<std::string>& graph6, const std::string& file,
                                    const std::vector<std::string>& constructs, std::string& digest_source)
{
    std::vector<NamedGraph> out;
    for (const auto& text : graph6) {
        out.push_back({text, parse_graph6(text, "graph6 '" + text + "'")});
        digest_source += text + "\n";
    }
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw InputError("cannot open " + file);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            line = trim(line);
            if (line.empty())
                continue;
            out.push_back({line, parse_graph6(line, file + ":" + std::to_string(number))});
            digest_source += line + "\n";
        }
    }
    for (const auto& text : constructs) {
        out.push_back({text, build(parse_construction(text))});
        digest_source += text + "\n";
    }
    if (out.empty())
        throw InputError("no input graphs (use --graph6, --file or --construct)");
    return out;
}

void print_rule(std::size_t width) { std::cout << std::string(width, '-') << '\n'; }

void write_csv(const std::string& path, const std::vector<ExtremalResult>& rows)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << kCsvHeader << '\n';
    for (const auto& r : rows)
        out << csv_row(r) << '\n';
}

void print_result(const ExtremalResult& r)
{
    std::printf("p_%d(%d) = %zu  (%s%s)\n", r.ell, r.n, r.value, r.exact ? "exact" : "lower bound",
                r.degenerate ? ", degenerate" : "");
    if (r.exact && !r.degenerate)
        std::printf("classes enumerated: %llu\n", static_cast<unsigned long long>(r.classes_enumerated));
    std::printf("witnesses: %zu\n", r.witnesses.size());
    for (const auto& w : r.witnesses)
        std::printf("  %s\n", w.c_str());
    for (const auto& c : r.witness_constructions)
        std::printf("  via %s\n", c.c_str());
}

int cmd_check(RunReport& report, const std::vector<NamedGraph>& inputs, int len)
{
    auto graphs = nlohmann::json::array();
    std::printf("%-28s %6s %7s  %-8s %s\n", "input", "order", "edges", "verdict", "witness");
    print_rule(72);
    for (const auto& [label, g] : inputs) {
        const auto w = find_equal_degree_path(g, len);
        std::string path;
        if (w) {
            for (std::size_t i = 0; i < w->path.size(); ++i)
                path += (i ? "-" : "") + std::to_string(w->path[i]);
            path += "  (degree " + std::to_string(w->shared_degree) + ")";
        }
        std::printf("%-28s %6d %7zu  %-8s %s\n", label.c_str(), g.order(), g.edge_count(), w ? "present" : "absent",
                    path.c_str());
        graphs.push_back({{"input", label},
                          {"order", g.order()},
                          {"edges", g.edge_count()},
                          {"verdict", w ? "present" : "absent"},
                          {"witness", w ? to_json(*w) : nlohmann::json(nullptr)}});
    }
    report.results = {{"len", len}, {"graphs", graphs}};
    return ok;
}

int cmd_construct(RunReport& report, const std::vector<std::string>& specs, const std::string& out_path)
{
    auto items = nlohmann::json::array();
    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out)
            throw std::runtime_error("cannot write " + out_path);
    }
    std::printf("%-28s %6s %7s %9s  %s\n", "construction", "order", "edges", "formula", "graph6");
    print_rule(72);
    for (const auto& text : specs) {
        const auto spec = parse_construction(text);
        const Graph g = build(spec);
        const std::string g6 = g.order() <= kGraph6MaxOrder ? to_graph6(g) : "";
        std::printf("%-28s %6d %7zu %9zu  %s\n", to_string(spec).c_str(), g.order(), g.edge_count(),
                    expected_edge_count(spec), g6.empty() ? "-" : g6.c_str());
        if (out.is_open() && !g6.empty())
            out << g6 << '\n';
        items.push_back({{"construction", to_string(spec)},
                         {"order", g.order()},
                         {"edges", g.edge_count()},
                         {"expected_edges", expected_edge_count(spec)},
                         {"graph6", g6.empty() ? nlohmann::json(nullptr) : nlohmann::json(g6)}});
    }
    report.results = {{"constructions", items}};
    return ok;
}

int cmd_extremal(RunReport& report, const Globals& globals, int len, int order, bool constructions_only)
{
    const auto r = compute_p(len, order, search_config(globals, constructions_only));
    print_result(r);
    write_csv(globals.csv, {r});
    report.results = to_json(r);
    return ok;
}

int cmd_table(RunReport& report, const Globals& globals, const std::vector<int>& lens, int min_order, int max_order,
              bool constructions_only)
{
    if (min_order < 1 || max_order < min_order)
        throw InputError("order range " + std::to_string(min_order) + ".." + std::to_string(max_order) + " is empty");
    std::vector<ExtremalResult> rows;
    std::printf("%4s %4s %7s %-6s %s\n", "ell", "n", "value", "exact", "witnesses");
    print_rule(40);
    for (int len : lens)
        for (int n = min_order; n <= max_order; ++n) {
            const auto r = compute_p(len, n, search_config(globals, constructions_only));
            std::printf("%4d %4d %7zu %-6s %zu\n", r.ell, r.n, r.value, r.exact ? "yes" : "no",
                        r.witnesses.empty() ? r.witness_constructions.size() : r.witnesses.size());
            rows.push_back(r);
        }
    write_csv(globals.csv, rows);
    auto payload = nlohmann::json::array();
    for (const auto& r : rows)
        payload.push_back(to_json(r));
    report.results = {{"rows", payload}};
    return ok;
}

int cmd_reproduce(RunReport& report, const Globals& globals, std::vector<std::string> suites)
{
    if (suites.size() == 1 && suites[0] == "all")
        suites = suite_names();
    auto payload = nlohmann::json::array();
    std::vector<ExtremalResult> values;
    std::vector<std::string> mismatches;
    for (const auto& name : suites) {
        const auto s = run_suite(name, search_config(globals, false), globals.seed);
        std::printf("suite %s\n", s.suite.c_str());
        print_rule(110);
        for (const auto& r : s.rows) {
            const char* mark = r.informational ? (r.pass ? "NOTE" : "NOTE*") : (r.pass ? "PASS" : "FAIL");
            std::printf("  %-5s %-70s %-18s expected %s\n", mark, r.check.c_str(), r.computed.c_str(),
                        r.expected.c_str());
            if (!r.pass && !r.informational)
                mismatches.push_back(name + ": " + r.check + ": computed " + r.computed + ", expected " + r.expected);
        }
        std::printf("(NOTE rows are reported findings; NOTE* marks one that differs from the stated expectation)\n\n");
        values.insert(values.end(), s.values.begin(), s.values.end());
        payload.push_back(to_json(s));
    }
    write_csv(globals.csv, values);
    report.results = {{"suites", payload}, {"passed", mismatches.empty()}};
    for (const auto& m : mismatches)
        std::fprintf(stderr, "mismatch: %s\n", m.c_str());
    return mismatches.empty() ? ok : expectation_failed;
}

std::string command_line(int argc, char** argv)
{
    std::string out = "eqdeg";
    for (int i = 1; i < argc; ++i)
        out += std::string(" ") + argv[i];
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equal-degree path checker and extremal search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(version()));

    Globals globals;
    app.add_option("--workers", globals.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--cache", globals.cache, "Directory for cached extremal results");
    app.add_option("--json", globals.json, "Write the run report as JSON to this path");
    app.add_option("--csv", globals.csv, "Write value tables as CSV to this path");
    app.add_option("--seed", globals.seed, "Seed for randomized checks");
    app.add_option("--method", globals.method, "Enumeration method")
        ->check(CLI::IsMember({"levelwise", "augmentation"}));

    int len = 0;
    int order = 0;
    bool constructions_only = false;

    auto* check = app.add_subcommand("check", "Look for an equal-degree path of a given length");
    std::vector<std::string> graph6_inputs, construct_inputs;
    std::string file_input;
    check->add_option("--graph6", graph6_inputs, "Graph in graph6 format (repeatable)");
    check->add_option("--file", file_input, "File with one graph6 string per line");
    check->add_option("--construct", construct_inputs, "Construction such as half_graph:5 (repeatable)");
    check->add_option("--len", len, "Path length")->required();

    auto* construct = app.add_subcommand("construct", "Build named constructions");
    std::vector<std::string> specs;
    std::string out_path;
    construct->add_option("spec", specs, "family:p1[,p2]")->required();
    construct->add_option("--out", out_path, "Write graph6 lines to this file");

    auto* extremal = app.add_subcommand("extremal", "Compute p_len(order)");
    extremal->add_option("--len", len, "Path length")->required();
    extremal->add_option("--order", order, "Number of vertices")->required();
    extremal->add_flag("--constructions-only", constructions_only, "Best verified construction instead of search");

    auto* reproduce = app.add_subcommand("reproduce", "Run reproduction suites");
    std::vector<std::string> suites;
    reproduce->add_option("suite", suites, "p1, p2, p3, triangles, halfgraph or all")->required();

    auto* table = app.add_subcommand("table", "Tabulate p_len(n) over a range of orders");
    std::vector<int> lens;
    int min_order = 1, max_order = 8;
    table->add_option("--len", lens, "Path lengths")->required()->delimiter(',');
    table->add_option("--min-order", min_order, "Smallest order");
    table->add_option("--max-order", max_order, "Largest order");
    table->add_flag("--constructions-only", constructions_only, "Best verified construction instead of search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = command_line(argc, argv);
    report.params = global_params(globals);
    int status = ok;
    try {
        if (*check) {
            std::string digest_source;
            const auto inputs = load_inputs(graph6_inputs, file_input, construct_inputs, digest_source);
            if (len < 1)
                throw InputError("path length must be at least 1, got " + std::to_string(len));
            report.params["len"] = len;
            report.params["input_digest"] = input_digest(digest_source);
            status = cmd_check(report, inputs, len);
        } else if (*construct) {
            std::string joined;
            for (const auto& s : specs)
                joined += s + "\n";
            report.params["constructions"] = specs;
            report.params["input_digest"] = input_digest(joined);
            status = cmd_construct(report, specs, out_path);
        } else if (*extremal) {
            report.params["len"] = len;
            report.params["order"] = order;
            report.params["constructions_only"] = constructions_only;
            report.params["input_digest"] =
                input_digest("extremal " + std::to_string(len) + " " + std::to_string(order) +
                             (constructions_only ? " constructions" : ""));
            status = cmd_extremal(report, globals, len, order, constructions_only);
        } else if (*reproduce) {
            std::string joined;
            for (const auto& s : suites)
                joined += s + "\n";
            report.params["suites"] = suites;
            report.params["input_digest"] = input_digest(joined + std::to_string(globals.seed));
            status = cmd_reproduce(report, globals, suites);
        } else if (*table) {
            report.params["len"] = lens;
            report.params["min_order"] = min_order;
            report.params["max_order"] = max_order;
            report.params["constructions_only"] = constructions_only;
            std::ostringstream key;
            for (int l : lens)
                key << l << ',';
            key << min_order << ".." << max_order << (constructions_only ? " constructions" : "");
            report.params["input_digest"] = input_digest(key.str());
            status = cmd_table(report, globals, lens, min_order, max_order, constructions_only);
        }
    } catch (const CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return capacity;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return bad_input;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return bad_input;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return bad_input;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return failure;
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!globals.json.empty()) {
        std::ofstream out(globals.json);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", globals.json.c_str());
            return failure;
        }
        out << to_json(report).dump(2) << '\n';
    }
    return status;
}
