#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anzahl {

/// One row of a run: a computed value, an oracle comparison, a bound check
/// or an identity check. Numeric payloads are decimal strings (arbitrary
/// precision; never floating point).
struct ReportItem {
    std::string kind;       // "value" | "oracle" | "bound" | "identity"
    std::string statistic;  // alpha/beta/gamma/rho/segre, bound id, identity label
    std::vector<std::pair<std::string, long>> params;
    std::string status = "checked";  // "checked" | "skipped"
    std::string reason;              // skip reason, empty otherwise
    bool passed = true;
    std::string value;     // computed / formula / lhs
    std::string expected;  // oracle / bound rhs (empty when not a comparison)
    std::uint64_t enumerated = 0;
    double elapsed_ms = 0.0;

    bool operator==(const ReportItem&) const = default;
};

struct RunSummary {
    long checked = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> grid;  // echoed parameters
    std::vector<ReportItem> items;
    double elapsed_ms = 0.0;

    RunSummary summary() const;
    /// Exit status contract: 0 iff zero failures.
    int exit_code() const { return summary().failed == 0 ? 0 : 1; }

    bool operator==(const RunReport&) const = default;
};

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

/// CSV rows in deterministic order (items are emitted in insertion order;
/// producers sort their parameter sweeps lexicographically).
std::string report_to_csv(const RunReport& report);
std::string report_to_plain(const RunReport& report);

}  // namespace anzahl
