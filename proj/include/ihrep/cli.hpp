#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

namespace ihrep::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Largest genus accepted on the command line; keeps every Betti number and
/// binomial in 64 bits.
inline constexpr unsigned kMaxGenus = 24;
/// Largest relation-ideal index accepted by `ring` and `e-basis --k`.
inline constexpr unsigned kMaxK = 12;
/// Largest truncation order accepted by `--order`.
inline constexpr std::size_t kMaxOrder = 2000;

/// Runs one command. `args` excludes the program name. Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ihrep::cli
