#include <doctest.h>

#include "anzahl/report.hpp"

using namespace anzahl;

namespace {

RunReport sample_report() {
    RunReport r;
    r.command = "verify";
    r.grid = {{"geometry", "symplectic"}, {"q", "2"}, {"max-dim", "6"}};
    ReportItem ok;
    ok.kind = "oracle";
    ok.statistic = "alpha";
    ok.params = {{"i", 2}, {"j", 2}};
    ok.value = "15";
    ok.expected = "15";
    ok.enumerated = 35;
    ok.elapsed_ms = 1.5;
    r.items.push_back(ok);
    ReportItem skip;
    skip.kind = "oracle";
    skip.statistic = "rho";
    skip.params = {{"j", 2}, {"k", 2}};
    skip.status = "skipped";
    skip.reason = "estimated 54331641 objects exceeds budget 10000000";
    r.items.push_back(skip);
    ReportItem bad = ok;
    bad.statistic = "beta";
    bad.passed = false;
    bad.expected = "21";
    r.items.push_back(bad);
    r.elapsed_ms = 12.25;
    return r;
}

}  // namespace

TEST_CASE("json report round-trips exactly") {
    RunReport r = sample_report();
    std::string text = report_to_json(r);
    RunReport back = report_from_json(text);
    CHECK(back == r);
    CHECK(report_to_json(back) == text);
}

TEST_CASE("summary counts and exit-status contract") {
    RunReport r = sample_report();
    RunSummary s = r.summary();
    CHECK(s.checked == 2);
    CHECK(s.passed == 1);
    CHECK(s.failed == 1);
    CHECK(s.skipped == 1);
    CHECK(r.exit_code() == 1);

    r.items.pop_back();  // drop the failure
    CHECK(r.exit_code() == 0);
    CHECK(r.summary().skipped == 1);  // skips never fail a run
}

TEST_CASE("csv has one row per item with a stable header") {
    std::string csv = report_to_csv(sample_report());
    CHECK(csv.find("kind,statistic,params,status,passed,value,expected,enumerated,elapsed_ms") == 0);
    long rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 4);  // header + 3 items
    CHECK(csv.find("i=2 j=2") != std::string::npos);
}

TEST_CASE("values are decimal strings, never floats") {
    RunReport r = sample_report();
    std::string text = report_to_json(r);
    CHECK(text.find("\"value\": \"15\"") != std::string::npos);
    CHECK(text.find("\"15.0\"") == std::string::npos);
}
