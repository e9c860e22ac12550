#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alvero/ace.hpp"
#include "alvero/budget.hpp"
#include "alvero/monomial_order.hpp"

namespace alvero::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidArguments = 2, kBudgetExhausted = 3 };

enum class Format { text, json };

struct RunConfig {
  std::optional<int> degree;
  std::optional<int> level;
  OrderKind order = OrderKind::grevlex;
  std::uint64_t budget = kDefaultStepBudget;
  std::filesystem::path cache_dir = ".alvero-cache";
  bool use_cache = true;
  double cluster_tol = kDefaultClusterTol;
  double residual_target = kDefaultResidualTarget;
  double gap_threshold = kDefaultGapThreshold;
  double verify_tol = 1e-6;
  double interlace_tol = 1e-8;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  unsigned restarts = 48;
  unsigned max_exponent = 64;
  std::size_t count = 500;
  std::vector<int> permutation;  // regseq; empty = every ordering
  std::optional<std::filesystem::path> input;  // ace: re-verify a saved candidate
  std::optional<Format> format;  // unset: json for ace, text otherwise
  bool certificates = false;

  /// Throws std::invalid_argument when a tolerance is negative or a count
  /// is zero where it must not be.
  void validate() const;
};

using Environment = std::map<std::string, std::string>;

/// ALVERO_CACHE_DIR and ALVERO_BUDGET from the process environment.
Environment process_environment();

/// Applies one `key = value` setting (config-file spelling, e.g. cache_dir,
/// gap_threshold). Throws std::invalid_argument for unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Flat key-value file: one `key = value` per line, `#` starts a comment.
void apply_config_file(RunConfig& config, const std::filesystem::path& file);

void apply_environment(RunConfig& config, const Environment& env);

/// Accepts plain integers and integral scientific notation such as 1e8.
std::uint64_t parse_budget(const std::string& text);

/// Entry point behind the alvero executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace alvero::cli
