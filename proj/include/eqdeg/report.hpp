#pragma once

#include "eqdeg/degree_paths.hpp"
#include "eqdeg/extremal.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace eqdeg {

std::string_view version();

/// Machine-readable record of one CLI invocation. `results` is a pure
/// function of the command and its input; timing lives only in wall_ms.
struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    double wall_ms = 0;
};

/// {"command", "version", "params", "results", "wall_ms"}
nlohmann::json to_json(const RunReport& report);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string input_digest(std::string_view bytes);

nlohmann::json to_json(const PathWitness& witness);

inline constexpr std::string_view kCsvHeader = "ell,n,value,exact,witness_count";

/// Witness count is the number of classes, or of constructions when the
/// order is too large for graph6.
std::string csv_row(const ExtremalResult& result);

}  // namespace eqdeg
