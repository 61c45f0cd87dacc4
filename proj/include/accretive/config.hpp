#pragma once

// `verify` configuration: JSON config file, flags, and the
// ACCRETIVE_LAB_SEED environment default. Precedence is
// flag > file > environment > built-in default.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "accretive/verify.hpp"

namespace accretive {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplayTarget {
  std::uint64_t seed = 0;
  int trial = 0;
};

struct VerifyOptions {
  SuiteConfig config;
  std::optional<ReplayTarget> replay;
  /// Set when --help was requested; `help` then holds the usage text.
  bool help_requested = false;
  std::string help;
};

/// Applies the keys of a JSON config document onto `config`. Unknown keys
/// are rejected.
void apply_config_json(const std::string& text, SuiteConfig& config);

/// "seed:index"
ReplayTarget parse_replay(const std::string& text);

/// "lo..hi" or a single dimension.
std::pair<int, int> parse_dim_range(const std::string& text);

/// Parses the arguments that follow `verify`. `env_seed` is the value of
/// ACCRETIVE_LAB_SEED, if set. Throws ConfigError on usage or validation
/// errors; the result is validated.
VerifyOptions parse_verify_args(const std::vector<std::string>& args, const char* env_seed = nullptr);

}  // namespace accretive
