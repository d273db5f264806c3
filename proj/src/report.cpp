#include "expsieve/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace expsieve {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::VerifiedEmpty: return "verified-empty";
        case Verdict::SurvivorsFound: return "survivors-found";
        case Verdict::BoundsMatched: return "bounds-matched";
        case Verdict::BoundsMismatched: return "bounds-mismatched";
        case Verdict::Incomplete: return "incomplete";
    }
    return "?";
}

int exit_code(Verdict v) { return v == Verdict::VerifiedEmpty || v == Verdict::BoundsMatched ? 0 : 1; }

std::string config_hash(const Json& config) {
    const std::string s = config.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("config_hash: SHA-256 failed");
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

Json to_json(const SieveCandidate& c) {
    Json t = Json::array();
    for (const auto& v : c.tuple) t.push_back(v.get_str());
    return {{"type", "record"}, {"stage", c.stage}, {"tuple", t}, {"predicates", c.predicates}};
}

Json to_json(const BoundReport& b) {
    Json j = {{"type", "bound"}, {"name", b.name}, {"value", b.value}, {"status", b.status()}};
    if (b.expected) j["target"] = *b.expected;
    if (b.cap) j["cap"] = true;
    if (!b.real_value.empty()) j["real_value"] = b.real_value;
    if (!b.note.empty()) j["note"] = b.note;
    Json in = Json::object();
    for (const auto& [k, v] : b.inputs) in[k] = v;
    j["inputs"] = in;
    return j;
}

void write_jsonl(const Report& r, std::ostream& out) {
    out << Json{{"type", "header"}, {"tool", "expsieve"}, {"command", r.command}, {"config", r.config},
                {"config_hash", r.hash}}
               .dump()
        << '\n';
    for (Json rec : r.records) {
        rec["config_hash"] = r.hash;
        out << rec.dump() << '\n';
    }
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_seconds);
    Json tail = {{"type", "verdict"}, {"verdict", to_string(r.verdict)}, {"records", r.records.size()},
                 {"config_hash", r.hash}};
    // Appended by hand so the wall clock is always the last field on the last line.
    std::string t = tail.dump();
    t.pop_back();
    out << t << ",\"wall_clock_seconds\":" << wall << "}\n";
}

void write_summary(const Report& r, std::ostream& out) {
    out << "expsieve " << r.command << "\n";
    for (const auto& s : r.summary) out << "  " << s << "\n";
    out << "  config hash: " << r.hash << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
}

std::string report_path(const Report& r, const std::string& dir) {
    std::string name = r.command;
    for (char& ch : name)
        if (ch == ' ') ch = '-';
    return (dir.empty() ? std::string(".") : dir) + "/" + name + "-" + r.hash.substr(0, 12) + ".jsonl";
}

}  // namespace expsieve
