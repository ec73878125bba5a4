// The full verification suite: each criterion is a deterministic function
// of its inputs only, shared between the `verify-all` subcommand and the
// acceptance runner.
#pragma once

#include <string>
#include <vector>

namespace divwin {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // case counts on success, first failure otherwise
};

// ids 1..9; determinism (10) is checked externally by re-running verify-all
CriterionResult run_criterion(int id, unsigned jobs = 1);
std::vector<CriterionResult> run_all_criteria(unsigned jobs = 1);

// one line per criterion plus a PASS/FAIL footer; no timestamps
std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace divwin
