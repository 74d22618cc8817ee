#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Every two-colour partition of n with its image, canonical order, one
/// "<colored> <-> <partition>" line each.
std::string correspondence_table(Part n);

/// All intermediates of the map for one input, as printed by `render`.
std::string render_pipeline(const TwoColorPartition& lambda);

}  // namespace schmidt::cli
