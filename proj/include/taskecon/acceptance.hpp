#pragma once

#include <string>
#include <vector>

#include "taskecon/dynamics.hpp"

namespace taskecon {

struct AcceptanceOptions {
    std::string only;  // run a single tag; empty runs everything
    EconomyParams economy;
    PreferenceParams preferences;
};

struct CheckResult {
    int id = 0;
    std::string tag;
    std::string title;
    bool pass = false;
    std::string detail;  // measured vs expected
};

std::vector<std::string> acceptance_tags();

/// Runs the acceptance criteria (concurrently) and returns them in id order.
/// Throws ConfigError for an unknown tag.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "[PASS] 01 calibration: ... | detail"
std::string format_check(const CheckResult& r);

}  // namespace taskecon
