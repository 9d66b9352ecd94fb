#pragma once

// The acceptance gate: eleven numbered criteria, each a deterministic
// statistical or exact check on a pre-registered seed. "full" runs the
// criteria at their stated scales (several minutes on one core); "quick" is
// the CI smoke profile with reduced n/R and correspondingly verified
// thresholds. Every criterion carries its full row-level report.

#include "rep/harness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rep {

enum class AcceptProfile { quick, full };

std::optional<AcceptProfile> parse_profile(std::string_view name);
const char* profile_name(AcceptProfile profile) noexcept;

struct CriterionResult {
    int number = 0;
    std::string title;
    CheckReport report;
    bool pass = false;
};

// Runs all eleven criteria in order. The default master seed 42 is the
// pre-registered acceptance seed; changing it turns the suite into an
// exploratory run of the same checks.
std::vector<CriterionResult> run_acceptance(AcceptProfile profile,
                                            std::uint64_t master_seed = 42,
                                            std::uint32_t workers = 1);

} // namespace rep
