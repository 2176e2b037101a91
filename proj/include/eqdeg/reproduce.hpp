#pragma once

#include "eqdeg/extremal.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqdeg {

struct SuiteRow {
    std::string check;
    std::string computed;
    std::string expected;
    bool pass = true;
    /// Reported finding; never fails the suite.
    bool informational = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteRow> rows;
    std::vector<ExtremalResult> values;

    bool passed() const;
};

/// p1, p2, p3, triangles, halfgraph.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name. `seed` drives every random
/// sample the suite draws.
SuiteResult run_suite(std::string_view name, const SearchConfig& config, std::uint64_t seed);

nlohmann::json to_json(const SuiteResult& suite);

}  // namespace eqdeg
