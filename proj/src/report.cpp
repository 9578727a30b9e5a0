#include "calab/report.hpp"

#include <json.hpp>
#include <sstream>

namespace calab {

std::string verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::verified: return "verified";
        case CheckVerdict::refuted: return "refuted";
        case CheckVerdict::not_applicable: return "not-applicable";
        case CheckVerdict::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<CheckVerdict> verdict_from_name(const std::string& name) {
    if (name == "verified") return CheckVerdict::verified;
    if (name == "refuted") return CheckVerdict::refuted;
    if (name == "not-applicable" || name == "not_applicable") return CheckVerdict::not_applicable;
    if (name == "unknown") return CheckVerdict::unknown;
    return std::nullopt;
}

ReportSummary summarize(const std::vector<CheckReport>& entries) {
    ReportSummary s;
    s.total = static_cast<int>(entries.size());
    for (const auto& e : entries) {
        switch (e.verdict) {
            case CheckVerdict::verified: ++s.verified; break;
            case CheckVerdict::refuted: ++s.refuted; break;
            case CheckVerdict::not_applicable: ++s.not_applicable; break;
            case CheckVerdict::unknown: ++s.unknown; break;
        }
        if (!e.as_expected()) ++s.unexpected;
    }
    return s;
}

std::string reports_to_json(const std::vector<CheckReport>& entries, const std::string& session_hash,
                            const std::string& generated_at) {
    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["session_hash"] = session_hash;
    doc["generated_at"] = generated_at;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["id"] = e.id;
        j["statement"] = e.statement;
        j["inputs"] = e.inputs;
        j["verdict"] = verdict_name(e.verdict);
        j["expected"] = verdict_name(e.expected);
        j["as_expected"] = e.as_expected();
        nlohmann::ordered_json vals = nlohmann::ordered_json::object();
        for (const auto& [k, v] : e.values) vals[k] = v;
        j["values"] = vals;
        j["scope_notes"] = e.scope_notes;
        doc["entries"].push_back(j);
    }
    ReportSummary s = summarize(entries);
    doc["summary"] = {{"total", s.total},
                      {"verified", s.verified},
                      {"refuted", s.refuted},
                      {"not_applicable", s.not_applicable},
                      {"unknown", s.unknown},
                      {"unexpected", s.unexpected}};
    return doc.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& entries) {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.as_expected() ? "[ok] " : "[!!] ") << e.id << ": " << verdict_name(e.verdict);
        if (e.expected != CheckVerdict::verified) out << " (expected " << verdict_name(e.expected) << ")";
        out << " -- " << e.statement << "\n";
        for (const auto& [k, v] : e.values) out << "       " << k << " = " << v << "\n";
        for (const auto& n : e.scope_notes) out << "       note: " << n << "\n";
    }
    ReportSummary s = summarize(entries);
    out << s.total << " checks: " << s.verified << " verified, " << s.refuted << " refuted, "
        << s.not_applicable << " not applicable, " << s.unknown << " unknown; " << s.unexpected
        << " unexpected\n";
    return out.str();
}

std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace calab
