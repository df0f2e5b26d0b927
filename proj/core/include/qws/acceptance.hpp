#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qws {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full self-check battery: every closed form against its
/// independent oracle (simulation, quadrature, continued fraction,
/// inversion) at pinned tolerances, with all fixture constants frozen in
/// the implementation. Deterministic (fixed seeds).
std::vector<CriterionResult> run_acceptance();

/// One PASS/FAIL line per criterion plus a summary; returns true when
/// everything passed.
bool report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace qws
