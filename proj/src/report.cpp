#include "anzahl/report.hpp"

#include <json.hpp>

#include <sstream>

namespace anzahl {

using json = nlohmann::ordered_json;

RunSummary RunReport::summary() const {
    RunSummary s;
    for (const auto& it : items) {
        if (it.status == "skipped") {
            ++s.skipped;
            continue;
        }
        ++s.checked;
        if (it.passed)
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

std::string report_to_json(const RunReport& report) {
    json j;
    j["command"] = report.command;
    json grid = json::object();
    for (const auto& [k, v] : report.grid) grid[k] = v;
    j["grid"] = grid;
    j["items"] = json::array();
    for (const auto& it : report.items) {
        json ji;
        ji["kind"] = it.kind;
        ji["statistic"] = it.statistic;
        json params = json::object();
        for (const auto& [k, v] : it.params) params[k] = v;
        ji["params"] = params;
        ji["status"] = it.status;
        if (!it.reason.empty()) ji["reason"] = it.reason;
        ji["passed"] = it.passed;
        ji["value"] = it.value;
        if (!it.expected.empty()) ji["expected"] = it.expected;
        ji["enumerated"] = it.enumerated;
        ji["elapsed_ms"] = it.elapsed_ms;
        j["items"].push_back(std::move(ji));
    }
    RunSummary s = report.summary();
    j["summary"] = {{"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed},
                    {"skipped", s.skipped}};
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    for (auto& [k, v] : j.at("grid").items()) r.grid.emplace_back(k, v.get<std::string>());
    for (auto& ji : j.at("items")) {
        ReportItem it;
        it.kind = ji.at("kind").get<std::string>();
        it.statistic = ji.at("statistic").get<std::string>();
        for (auto& [k, v] : ji.at("params").items()) it.params.emplace_back(k, v.get<long>());
        it.status = ji.at("status").get<std::string>();
        if (ji.contains("reason")) it.reason = ji.at("reason").get<std::string>();
        it.passed = ji.at("passed").get<bool>();
        it.value = ji.at("value").get<std::string>();
        if (ji.contains("expected")) it.expected = ji.at("expected").get<std::string>();
        it.enumerated = ji.at("enumerated").get<std::uint64_t>();
        it.elapsed_ms = ji.at("elapsed_ms").get<double>();
        r.items.push_back(std::move(it));
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

namespace {

std::string params_to_string(const std::vector<std::pair<std::string, long>>& params) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << " ";
        out << k << "=" << v;
        first = false;
    }
    return out.str();
}

}  // namespace

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "kind,statistic,params,status,passed,value,expected,enumerated,elapsed_ms\n";
    for (const auto& it : report.items) {
        out << it.kind << "," << it.statistic << "," << params_to_string(it.params) << ","
            << it.status << "," << (it.passed ? "true" : "false") << "," << it.value << ","
            << it.expected << "," << it.enumerated << "," << it.elapsed_ms << "\n";
    }
    return out.str();
}

std::string report_to_plain(const RunReport& report) {
    std::ostringstream out;
    for (const auto& it : report.items) {
        if (it.status == "skipped") {
            out << "SKIP " << it.statistic << " " << params_to_string(it.params) << " ("
                << it.reason << ")\n";
            continue;
        }
        out << (it.passed ? "ok   " : "FAIL ") << it.statistic << " "
            << params_to_string(it.params) << " value=" << it.value;
        if (!it.expected.empty()) out << " expected=" << it.expected;
        out << "\n";
    }
    RunSummary s = report.summary();
    out << "checked " << s.checked << ", passed " << s.passed << ", failed " << s.failed
        << ", skipped " << s.skipped << "\n";
    return out.str();
}

}  // namespace anzahl
