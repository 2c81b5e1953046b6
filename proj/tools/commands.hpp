// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace nsm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBlowup = 1;
inline constexpr int kExitConfig = 2;

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_picard(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_split(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_norms(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point: nsm <subcommand> <config> [--seed N]
/// [--out-dir DIR] [--stride N]. Data goes to files and `out`, diagnostics
/// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsm::cli
