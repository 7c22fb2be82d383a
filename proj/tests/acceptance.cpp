// Acceptance suite: runs every verification property at its stated tolerance
// and prints one pass/fail line per criterion.  Exits nonzero on any failure.
// A second full run with the same seed must render byte-identically.

#include <iostream>
#include <sstream>

#include "hooke/verify.hpp"

int main() {
    hooke::VerifyConfig cfg;  // default seed, full sample counts
    const hooke::VerificationReport first = hooke::run_verification(cfg);
    hooke::print_report(first, std::cout);
    hooke::print_timings(first, std::cerr);

    const hooke::VerificationReport second = hooke::run_verification(cfg);
    std::ostringstream r1, r2;
    hooke::print_report(first, r1);
    hooke::print_report(second, r2);
    const bool deterministic = r1.str() == r2.str();
    std::cout << (deterministic ? "[PASS]" : "[FAIL]")
              << " full-suite rerun is byte-identical\n";

    const bool ok = first.all_pass() && second.all_pass() && deterministic;
    return ok ? 0 : 1;
}
