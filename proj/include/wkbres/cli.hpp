#pragma once

#include <iosfwd>

#include "wkbres/config.hpp"

namespace wkbres::cli {

/// Executes one command; returns the process exit status. Module errors are
/// reported as a single line on err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace wkbres::cli
