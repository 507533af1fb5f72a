#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopfpartial/scenarios.hpp"

namespace hp {

constexpr const char* kToolVersion = "0.1.0";

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

// Report envelope written by `verify` and compared by `golden`.
Json report_envelope(const ScenarioResult& result);

// Entry point of the hopf-partial tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hp
