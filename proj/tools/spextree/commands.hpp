#pragma once

#include "options.hpp"

namespace spextree::cli {

// Each returns the process exit code.
int cmd_analyze(const CommandConfig& cfg);
int cmd_predict(const CommandConfig& cfg);
int cmd_verify(const CommandConfig& cfg);
int cmd_construct(const CommandConfig& cfg);
int cmd_bounds(const CommandConfig& cfg);
int cmd_catalog(const CommandConfig& cfg);

}  // namespace spextree::cli
