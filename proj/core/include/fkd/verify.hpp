#pragma once

#include <string>
#include <vector>

namespace fkd::verify {

struct CheckInfo {
    std::string id;
    int criterion;  // acceptance criterion 1..9
    std::string title;
};

struct CheckResult {
    std::string id;
    int criterion = 0;
    bool pass = false;
    std::string expected;
    std::string actual;
    double ms = 0;
};

// all checks, in dependency order
const std::vector<CheckInfo>& checks();
bool has_check(const std::string& id);
CheckResult run_check(const std::string& id);
// results come back in the order of checks(), whatever the schedule
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, int threads = 0);
std::vector<CheckResult> verify_all(int threads = 0);

// [{check_id, status, expected, actual, ms}]
std::string report_json(const std::vector<CheckResult>& rs);
std::string report_text(const std::vector<CheckResult>& rs);

// checks that fail against the printed statements; the reasons are in the README
const std::vector<std::string>& documented_failures();

}  // namespace fkd::verify
