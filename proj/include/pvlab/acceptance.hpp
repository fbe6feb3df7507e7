#pragma once

/* The verification suite: one entry per acceptance criterion, each printing
 * a PASS/FAIL line with the measured quantity.  `fast` runs a reduced-range
 * subset (criteria needing the full grids are reported as SKIP there).
 * Thresholds come from include/pvlab/calibration.hpp. */

#include <iosfwd>
#include <string>
#include <vector>

namespace pvlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOutcome {
    std::vector<CriterionResult> results;
    double total_seconds = 0.0;

    bool all_passed() const {
        for (const auto& r : results) {
            if (!r.skipped && !r.pass) return false;
        }
        return true;
    }
};

AcceptanceOutcome run_acceptance(bool fast, std::ostream& log);

} // namespace pvlab
