#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace calab {

enum class CheckVerdict { verified, refuted, not_applicable, unknown };

std::string verdict_name(CheckVerdict v);
std::optional<CheckVerdict> verdict_from_name(const std::string& name);

/// Structured verdict tying a computed fact to a mathematical claim.
struct CheckReport {
    std::string id;
    std::string statement;  // one-line mathematical statement of the claim
    std::string inputs;
    std::vector<std::pair<std::string, std::string>> values;  // insertion order kept
    CheckVerdict verdict = CheckVerdict::unknown;
    CheckVerdict expected = CheckVerdict::verified;
    std::vector<std::string> scope_notes;

    bool as_expected() const { return verdict == expected; }
    void value(const std::string& key, const std::string& val) { values.emplace_back(key, val); }
    void note(const std::string& n) { scope_notes.push_back(n); }
};

struct ReportSummary {
    int total = 0, verified = 0, refuted = 0, not_applicable = 0, unknown = 0, unexpected = 0;
};
ReportSummary summarize(const std::vector<CheckReport>& entries);

/// Stable-key-order JSON document for a batch of reports.
std::string reports_to_json(const std::vector<CheckReport>& entries, const std::string& session_hash,
                            const std::string& generated_at);

/// Plain-text rendering, one line per entry.
std::string reports_to_text(const std::vector<CheckReport>& entries);

std::string fnv1a_hex(const std::string& data);

inline constexpr const char* kToolName = "calab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace calab
