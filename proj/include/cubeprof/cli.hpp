#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cubeprof::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;       // verify rejected the matching, selftest failed
inline constexpr int kNotAdmissible = 2;
inline constexpr int kUnknown = 3;        // Unknown verdict or search budget exceeded
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;
inline constexpr int kIoError = 74;

// Largest dimension for which construct/decide materialise a witness.
inline constexpr int kMaxWitnessDimension = 24;

// args[0] is the program name. Results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cubeprof::cli
