#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alvero/budget.hpp"
#include "alvero/monomial_order.hpp"
#include "alvero/multipoly.hpp"

namespace alvero {

struct GroebnerStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_pruned = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};

struct GroebnerOptions {
  StepBudget* budget = nullptr;
  /// Express every basis element in terms of the input generators.
  bool track_cofactors = false;
  /// Return {1} as soon as a nonzero constant shows up.
  bool stop_on_unit = true;
};

/// Reduced Gröbner basis of the ideal spanned by `generators()`.
///
/// Basis elements are monic, sorted by decreasing leading monomial, and no
/// leading monomial divides a term of another element. When cofactors were
/// tracked, basis()[k] == sum_l cofactors()[k][l] * generators()[l].
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<MultiPoly> generators, std::vector<MultiPoly> basis, MonomialOrder order,
                GroebnerStats stats = {}, std::optional<std::vector<std::vector<MultiPoly>>> cofactors = {});

  const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
  const std::vector<MultiPoly>& basis() const noexcept { return basis_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const GroebnerStats& stats() const noexcept { return stats_; }
  std::size_t nvars() const noexcept { return order_.nvars(); }
  bool is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

  const Monomial& leading_monomial(std::size_t k) const { return leading_[k]; }
  /// Leading terms of basis()[k] under order(), sorted by the order.
  const std::vector<Term>& ordered_terms(std::size_t k) const { return ordered_[k]; }
  const std::optional<std::vector<std::vector<MultiPoly>>>& cofactors() const noexcept { return cofactors_; }

 private:
  std::vector<MultiPoly> generators_;
  std::vector<MultiPoly> basis_;
  MonomialOrder order_;
  GroebnerStats stats_;
  std::optional<std::vector<std::vector<MultiPoly>>> cofactors_;
  std::vector<Monomial> leading_;
  std::vector<std::vector<Term>> ordered_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Möller pair criteria. Throws std::invalid_argument on an empty
/// generator list, AmbientMismatch on mixed variable counts, BudgetExceeded
/// when the budget runs out. The output depends only on the ideal and the
/// order.
GroebnerBasis buchberger(std::vector<MultiPoly> generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Remainder of p on division by the basis; no term of the result is
/// divisible by a leading monomial of the basis.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis, StepBudget* budget = nullptr);

/// Division with quotients: p == sum_k quotients[k] * basis()[k] + remainder.
struct Division {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};
Division divide(const MultiPoly& p, const GroebnerBasis& basis, StepBudget* budget = nullptr);

/// Re-checks the defining properties of a reduced Gröbner basis: every
/// S-polynomial and every generator reduces to zero, and the basis is
/// reduced and monic. Used by tests and by cache loading.
bool is_reduced_groebner_basis(const GroebnerBasis& basis);

/// Dimension of K[a]/I: the size of a largest variable subset S such that
/// no leading monomial of the basis uses only variables in S. Returns -1
/// for the unit ideal.
int krull_dimension(const GroebnerBasis& basis);

}  // namespace alvero
