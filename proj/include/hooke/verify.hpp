#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hooke/sampling.hpp"

namespace hooke {

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst residual observed
    double tolerance = 0.0;
    std::size_t samples = 0;
    double seconds = 0.0;
    std::string note;
};

struct VerificationReport {
    std::vector<PropertyResult> results;
    double total_seconds = 0.0;
    bool all_pass() const;
};

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    bool fast = false;  // reduced sample counts for a quick signal
    double time_budget_seconds = 60.0;
    // Overrides for individual property tolerances; <= 0 keeps the default.
    double caustic_drift_tol = 0.0;
};

/// Runs the whole property suite.  Deterministic for a fixed seed.
VerificationReport run_verification(const VerifyConfig& cfg = {});

/// One line per property.  The rendering contains no timings, so two runs
/// with the same seed produce byte-identical text; timings are available in
/// the report struct (and printed separately by the CLI to stderr).
void print_report(const VerificationReport& report, std::ostream& os);

/// Timing side channel, one line per property plus a total.
void print_timings(const VerificationReport& report, std::ostream& os);

}  // namespace hooke
