#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alvero/basis_cache.hpp"
#include "alvero/budget.hpp"
#include "alvero/membership.hpp"
#include "alvero/monomial_order.hpp"
#include "alvero/resultant.hpp"

namespace alvero {

inline constexpr int kMaxSupportedDegree = 8;

/// Shared knobs for the exact checks.
struct ExactContext {
  OrderKind order = OrderKind::grevlex;
  StepBudget* budget = nullptr;
  BasisCache* cache = nullptr;
  unsigned jobs = 1;
  bool certificates = false;
  unsigned max_exponent = 64;
};

struct Timings {
  double resultants_s = 0;
  double basis_s = 0;
  double membership_s = 0;
};

/// Radical membership of every a_j in (R_1, ..., R_{d-1}), plus the
/// pure-power leading monomial condition on the reduced basis.
struct ConjectureReport {
  int degree = 0;
  std::string order_tag;
  std::vector<bool> radical_member;                 // index j-1 for a_j
  std::vector<std::optional<unsigned>> exponents;   // least N with a_j^N in the ideal
  std::vector<bool> exponent_above_bound;
  /// For each a_j, the exponent of a basis leading monomial that is a pure
  /// power of a_j, if any.
  std::vector<std::optional<unsigned>> pure_power;
  std::size_t basis_size = 0;
  int dimension = 0;
  Timings timings;

  bool radical_ok() const;
  bool pure_power_ok() const;
  bool verdict() const { return radical_ok() && pure_power_ok(); }
};

ConjectureReport verify_conjecture(int degree, const ExactContext& ctx);

struct TheoremEntry {
  int index = 0;         // i
  bool member = false;   // R_i in sqrt(R_j : j != i)
  double seconds = 0;
};

/// Non-membership of R_i in the radical of the other resultants for every
/// i in {d-3, d-2, d-1} within 1..d-1.
struct TheoremReport {
  int degree = 0;
  std::string order_tag;
  std::vector<TheoremEntry> entries;
  std::vector<int> skipped;  // candidate indices outside 1..d-1
  Timings timings;
  bool verdict() const;
};

TheoremReport verify_main_theorem(int degree, const ExactContext& ctx);

/// Quotient dimensions of successive prefixes of a permuted resultant family.
struct RegularSequenceReport {
  int degree = 0;
  std::string order_tag;
  std::vector<int> permutation;  // 1-based resultant indices
  std::vector<int> dimensions;   // after 1, 2, ... members
  std::optional<std::size_t> first_failure;  // prefix length, 1-based
  Timings timings;
  bool verdict() const { return !first_failure.has_value(); }
};

/// `permutation` lists 1..d-1 in some order; empty means identity.
RegularSequenceReport check_regular_sequence(int degree, std::vector<int> permutation, const ExactContext& ctx);

}  // namespace alvero
