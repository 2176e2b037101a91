#include "eqdeg/report.hpp"

#include <cstdio>

namespace eqdeg {

std::string_view version() { return EQDEG_VERSION; }

nlohmann::json to_json(const RunReport& report)
{
    return {
        {"command", report.command},
        {"version", version()},
        {"params", report.params},
        {"results", report.results},
        {"wall_ms", report.wall_ms},
    };
}

std::string input_digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json to_json(const PathWitness& w)
{
    return {{"u", w.u}, {"w", w.w}, {"shared_degree", w.shared_degree}, {"length", w.length()}, {"path", w.path}};
}

std::string csv_row(const ExtremalResult& r)
{
    const auto count = r.witnesses.empty() ? r.witness_constructions.size() : r.witnesses.size();
    return std::to_string(r.ell) + "," + std::to_string(r.n) + "," + std::to_string(r.value) + "," +
           (r.exact ? "true" : "false") + "," + std::to_string(count);
}

}  // namespace eqdeg
