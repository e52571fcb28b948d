// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace rankcrypt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDecode = 3;
inline constexpr int kExitVerify = 4;

/// Entry point of the rankcrypt tool: build, encode, decode, simulate, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankcrypt::cli
