#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "effdim/rep.hpp"

namespace effdim {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string command;
  std::string quiver_path;
  std::optional<std::size_t> truncate;
  std::optional<std::size_t> max_len;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out_path;
  unsigned threads = 1;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// verify: check this representation file instead of building one.
  std::optional<std::string> rep_path;
  /// construct / verify: coefficient field of the truncated construction.
  LabelField labels = LabelField::primes;
  /// formula: run sizes of a type-A quiver.
  std::vector<std::size_t> segments;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

/// Each command writes its report to `out` and diagnostics to `err`, and
/// returns the process exit code. Input errors throw; run_command maps
/// them to exit_code::input_error.
int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_stabilize(const RunConfig& cfg, std::ostream& out);
int cmd_formula(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command, honours cfg.out_path and catches errors.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace effdim
