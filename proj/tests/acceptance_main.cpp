/* Runs the verification suite and prints one PASS/FAIL line per criterion.
 * Exit code 0 only when every non-skipped criterion passes. */

#include <cstring>
#include <iostream>

#include "pvlab/acceptance.hpp"

int main(int argc, char** argv) {
    bool fast = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) fast = true;
    }
    pvlab::AcceptanceOutcome out = pvlab::run_acceptance(fast, std::cout);
    std::cout << (out.all_passed() ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " (total "
              << out.total_seconds << " s)\n";
    return out.all_passed() ? 0 : 1;
}
