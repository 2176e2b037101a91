#pragma once

#include "eqdeg/constructions.hpp"
#include "eqdeg/enumerate.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace eqdeg {

enum class SearchMode { exhaustive, constructions_only };

struct SearchConfig {
    int max_order = kExhaustiveOrderLimit;
    int workers = 1;
    SearchMode mode = SearchMode::exhaustive;
    EnumerationMethod method = EnumerationMethod::levelwise;
    std::optional<std::filesystem::path> cache_dir;
};

/// Largest edge count of an order-n graph with no equal-degree path of
/// length ell, either exact (exhaustive) or a verified construction bound.
struct ExtremalResult {
    int ell = 0;
    int n = 0;
    std::size_t value = 0;
    bool exact = false;
    /// ell >= n: no path of that length exists, so K_n qualifies vacuously.
    bool degenerate = false;
    /// Canonical graph6 of every witness class, sorted. Construction bounds
    /// list witnesses only while the order fits graph6 (at most 62).
    std::vector<std::string> witnesses;
    /// Construction bounds: every verified family instance attaining `value`.
    std::vector<std::string> witness_constructions;
    std::uint64_t classes_enumerated = 0;

    // Run statistics; not part of the serialized payload.
    double wall_ms = 0;
    int workers = 1;
    bool from_cache = false;
};

/// p_ell(n). In exhaustive mode every class of order n is checked; in
/// constructions-only mode this is lower_bound_from_constructions. ell >= n
/// short-circuits to the degenerate complete-graph answer in either mode.
/// Throws InputError for ell < 1 or n < 1, CapacityError beyond the
/// exhaustive ceiling.
ExtremalResult compute_p(int ell, int n, const SearchConfig& config = {});

/// Best edge count among the named families of order n on which the checker
/// finds no equal-degree ell-path. The empty graph is the fallback.
ExtremalResult lower_bound_from_constructions(int ell, int n);

/// Every family instance of order n the lower-bound search tries.
std::vector<ConstructionSpec> candidate_constructions(int n);

/// floor(n(n-m-1)/2 + m(m+1)(m+2)/12), m the largest integer with
/// m(m+1)/2 <= n. Throws InputError for n < 1.
std::size_t p1_upper_bound(int n);

struct UniquenessReport {
    ExtremalResult result;
    std::string expected;              ///< construction string
    std::string expected_graph6;       ///< its canonical graph6
    std::size_t expected_edges = 0;
    bool expected_satisfies = false;   ///< checker finds no equal-degree ell-path
    bool expected_is_witness = false;  ///< among the extremal classes
    bool unique = false;               ///< the only extremal class
};

/// Runs compute_p exhaustively and compares the witness census with the
/// expected construction. Throws CapacityError outside the exhaustive range.
UniquenessReport verify_uniqueness(int ell, int n, const ConstructionSpec& expected, const SearchConfig& config = {});

/// Payload keys: ell, n, value, exact, degenerate, witnesses,
/// witness_constructions, classes_enumerated.
nlohmann::json to_json(const ExtremalResult& result);
ExtremalResult extremal_result_from_json(const nlohmann::json& payload);
nlohmann::json to_json(const UniquenessReport& report);

}  // namespace eqdeg
