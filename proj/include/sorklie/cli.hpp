// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sorklie::cli {

inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kCheckFailed = 2;
inline constexpr int kUsageError = 64;

/// Runs the command line with args excluding the program name. `in` backs
/// the "-" argument of certify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace sorklie::cli
