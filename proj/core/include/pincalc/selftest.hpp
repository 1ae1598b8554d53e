#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pincalc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t checks = 0;   // individual assertions run
    std::string detail;       // first failure, empty when passed
};

// Runs the acceptance suite (the worked-example reproduction checks, the
// fast-path equivalence sweep, the Wu cross-check, the implication lattice and
// the oracle-equivalence batch). When `progress` is given, one pass/fail
// line per criterion is streamed as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace pincalc
