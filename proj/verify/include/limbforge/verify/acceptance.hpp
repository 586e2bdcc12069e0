#pragma once

#include <functional>
#include <string>
#include <vector>

namespace limbforge::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Side findings printed next to the criteria; never pass/fail.
struct Report {
    std::string name;
    std::string detail;
};

using CriterionCheck = std::function<CriterionResult()>;

/// The eleven acceptance checks in order; each can run on its own.
std::vector<std::pair<int, CriterionCheck>> acceptance_checks();

/// Runs every check, handing each result to `on_result` when it finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

std::vector<Report> run_reports();

/// "PASS  3  name (1.2 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace limbforge::verify
