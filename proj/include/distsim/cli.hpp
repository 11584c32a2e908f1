// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command. Results go to `out`, diagnostics to `err`. Exit codes: 0 success,
/// 1 usage error, 2 data or measure error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distsim::cli
