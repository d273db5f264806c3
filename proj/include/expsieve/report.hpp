#pragma once

#include "expsieve/bounds.hpp"
#include "expsieve/scan.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace expsieve {

using Json = nlohmann::json;

// "incomplete" marks a scan stopped early (--max-indices); it never exits 0.
enum class Verdict { VerifiedEmpty, SurvivorsFound, BoundsMatched, BoundsMismatched, Incomplete };
std::string to_string(Verdict v);
int exit_code(Verdict v);

// SHA-256 (hex) of the compact dump of a config object; keys are sorted, so the dump is canonical.
std::string config_hash(const Json& config);

Json to_json(const SieveCandidate& c);
Json to_json(const BoundReport& b);

struct Report {
    std::string command;
    Json config = Json::object();
    std::string hash;                 // config_hash(config); set by finalize()
    std::vector<Json> records;        // each gets "config_hash" on output
    std::vector<std::string> summary; // human-readable lines
    Verdict verdict = Verdict::VerifiedEmpty;
    double wall_seconds = 0;

    void finalize() { hash = config_hash(config); }
};

// Header line, one line per record, trailer with verdict and wall clock. Only the
// "wall_clock_seconds" field differs between reruns of the same config.
void write_jsonl(const Report& r, std::ostream& out);
void write_summary(const Report& r, std::ostream& out);
// <dir>/<command with '-' for ' '>-<first 12 hex of hash>.jsonl
std::string report_path(const Report& r, const std::string& dir);

}  // namespace expsieve
