#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dmm::verify {

/// One named claim check behind the verify-paper command.  `run` appends
/// failure descriptions to the context; a check passes when it records none
/// and at least one assertion.
struct CheckContext {
    std::vector<std::string> failures;
    int assertions = 0;
    bool parallel = false;
    int jobs = 0;
    void require(bool cond, const std::string& what) {
        ++assertions;
        if (!cond) failures.push_back(what);
    }
};

struct Check {
    std::string name;
    std::string section;  // "2".."9"
    std::string ref;      // claim reference
    std::function<void(CheckContext&)> run;
};

const std::vector<Check>& all_checks();

struct CheckResult {
    std::string name;
    std::string section;
    std::string ref;
    bool passed = false;
    int assertions = 0;
    double milliseconds = 0.0;
    std::vector<std::string> failures;
};

struct SuiteResult {
    std::vector<CheckResult> results;
    bool coverage_ok = true;                 // every registered op exercised
    std::vector<std::string> missing_ops;
    bool all_passed() const;
};

struct SuiteOptions {
    std::string section = "all";  // all | 2..9
    bool parallel = false;
    int jobs = 0;
    bool check_coverage = true;   // only meaningful for full runs
};

SuiteResult run_suite(const SuiteOptions& opts = {});

/// Runs the named checks only (used by the acceptance binary).
SuiteResult run_named(const std::vector<std::string>& names, const SuiteOptions& opts = {});

}  // namespace dmm::verify
