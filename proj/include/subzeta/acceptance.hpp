#pragma once

#include <string>
#include <vector>

namespace subzeta {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ok = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;  // seconds; 0 means no runtime bound
};

struct AcceptanceOptions {
    int threads = 0;
};

constexpr int kCriterionCount = 12;

// Throws UnknownNameError for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});

// "all", a number "1".."12", or an alias such as "enumeration" or "reduced".
// Throws UnknownNameError.
std::vector<int> suite_members(const std::string& name);
std::vector<std::string> suite_names();
std::vector<CriterionResult> run_suite(const std::string& name, const AcceptanceOptions& opt = {});

}  // namespace subzeta
