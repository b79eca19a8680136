#pragma once

#include "density.hpp"
#include "sysfile.hpp"

namespace hensel {

// Rendered, deterministic reports for the CLI commands. Each throws Error
// with the class the command's exit code is derived from.
std::string run_lift(const SystemSpec& spec);
std::string run_solve(const SystemSpec& spec, const std::string& target_csv);
std::string run_invert(const SystemSpec& spec, const std::string& target_csv);
std::string run_implicit(const SystemSpec& spec, const std::string& params_csv);
std::string run_smooth(const SystemSpec& spec);
std::string run_sample(const SystemSpec& spec, int count, int level, const std::string* avoid_expr);

} // namespace hensel
