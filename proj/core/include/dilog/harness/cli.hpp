#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dilog {

/// Exit statuses of run_cli.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `dilog` tool. `args` excludes the program name.
///
///   verify --identity NAME [--<param> VALUE ...] [--digits N] [--max-terms N]
///          [--format json|text] [--output PATH] [--trace PATH]
///   suite [--digits N] [--format text|json] [--output PATH]
///   properties [--seed N] [--suite NAME ...] [--digits N]
///   special-values [--digits N]
///   list
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dilog
