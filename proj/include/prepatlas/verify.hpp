#pragma once

#include <string>
#include <vector>

namespace prepatlas {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;  // failure explanation or key reproduced values
};

/// Runs the nine headline verification criteria (classification, degree
/// bound, theta family, escape radii, Cantor localization, capacity,
/// Kronecker round trip, property suites) and reports one result per
/// criterion.
std::vector<CriterionResult> run_verification();

/// One "PASS"/"FAIL" line per criterion plus a summary line.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace prepatlas
