#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elicit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `elicit` command. `args` excludes the program name.
///
///   elicit recommend PROFILE [--dataset PATH] [--format text|structured]
///   elicit validate [DATASET] [--format text|structured]
///   elicit explain PROFILE TECHNIQUE [--dataset PATH]
///   elicit taxonomy [--dataset PATH] [--format text|structured]
///   elicit diff BASE VARIANT [--dataset PATH] [--format text|structured]
///
/// Without --dataset the built-in default dataset is used. Exit status is 0 on
/// success, 1 on usage errors, 2 on any data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elicit
