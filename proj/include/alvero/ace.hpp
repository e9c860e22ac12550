#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alvero/realroots.hpp"

namespace alvero {

inline constexpr double kDefaultGapThreshold = 1e-3;
inline constexpr double kDefaultResidualTarget = 1e-9;

/// Prescribed pairs (k_j, m_j) for an almost counterexample of a given
/// level: the k_j run over 1..d-1 without the level.
struct AceSpec {
  int degree = 0;
  int level = 0;
  std::vector<std::pair<int, int>> pairs;

  /// All m_j = 1. Throws std::invalid_argument for a level outside 1..d-1.
  static AceSpec with_unit_multiplicities(int degree, int level);
  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;
  bool unit_multiplicities() const;
};

struct AceCandidate {
  RootProfile profile;
  std::vector<double> roots;  // weakly increasing, roots.front() == 0, roots.back() == 1
  double residual = 0;
  std::vector<double> per_pair_gaps;
  double level_gap = 0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
};

/// Residual data for a root vector under a spec.
struct AceEvaluation {
  double residual = 0;
  std::vector<double> per_pair_gaps;
  std::vector<double> alphas;  // alpha_{k_j, m_j} per pair
  double level_gap = 0;
};

/// Evaluates residual, gaps and level gap for weakly increasing roots.
AceEvaluation evaluate_ace(const std::vector<double>& roots, const AceSpec& spec);

/// Builds a candidate (profile, residual, gaps) from weakly increasing roots.
AceCandidate make_candidate(std::vector<double> roots, const AceSpec& spec, double cluster_tol = kDefaultClusterTol);

struct SearchConfig {
  std::uint64_t seed = 1;
  unsigned restarts = 48;
  unsigned jobs = 1;
  std::size_t max_evaluations = 6000;
  unsigned polish_iterations = 400;
  double polish_damping = 0.5;
  double residual_target = kDefaultResidualTarget;
  double gap_threshold = kDefaultGapThreshold;
  double cluster_tol = kDefaultClusterTol;
};

struct AceSearchResult {
  AceCandidate best;
  bool success = false;  // residual < target and level_gap > gap_threshold
  unsigned restarts_run = 0;
};

/// Multi-start Nelder-Mead over the interior roots with an ordering
/// penalty, followed by cluster snapping and a damped fixed-point polish.
/// Degrees below 4 are rejected.
AceSearchResult find_almost_counterexample(const AceSpec& spec, const SearchConfig& config = {});

struct LevelVerdict {
  bool ok = false;
  std::vector<double> shared_root_gaps;  // per j != level: min |root(H_j) - root(f)|
  double level_gap = 0;
  std::size_t distinct_roots = 0;
};

/// Almost-counterexample check: f shares a root with every H_j, j != level,
/// up to tol; H_level(f) stays more than gap_threshold away from every root
/// of f; and f has at least two distinct roots.
LevelVerdict verify_level(const AceCandidate& candidate, const AceSpec& spec, double tol,
                          double gap_threshold = kDefaultGapThreshold);

struct ChainReport {
  bool applicable = false;   // preconditions held
  std::string reason;        // why not, when !applicable
  unsigned zero_multiplicity = 0;  // m
  double beta = 0;                 // first strictly positive root of f
  std::vector<double> leading_alphas;  // alpha_{l,1}, l = 1..m
  std::vector<double> nested;          // beta^{(l)}, l = 1..m-1
  bool zero_alphas = false;      // alpha_{l,1} = 0 for l <= m-1
  bool nested_chain = false;     // 0 < beta^{(m-1)} < ... < beta^{(1)} < beta
  bool alpha_in_interval = false;  // alpha_{m,1} in ]0, beta^{(m-1)}[
  bool alpha_not_root = false;     // alpha_{m,1} is not a root of f
  double alpha_root_distance = 0;
  bool ok() const { return applicable && zero_alphas && nested_chain && alpha_in_interval && alpha_not_root; }
};

/// Walks the interlacing argument on a verified almost counterexample of
/// level d-3, d-2 or d-1 with all m_j = 1.
ChainReport verify_contradiction_chain(const AceCandidate& candidate, const AceSpec& spec, double tol,
                                       double gap_threshold = kDefaultGapThreshold);

}  // namespace alvero
