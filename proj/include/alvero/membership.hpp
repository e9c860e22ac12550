#pragma once

#include <optional>
#include <vector>

#include "alvero/groebner.hpp"

namespace alvero {

/// Outcome of an ideal or radical membership test.
///
/// For ideal membership with certificates, p == sum_k cofactors[k] * gens[k].
/// For radical membership, `exponent` is the least N found with p^N in the
/// ideal (cofactors then witness p^N); `exponent_above_bound` marks a
/// positive verdict whose exponent exceeds the search bound.
struct MembershipCertificate {
  bool verdict = false;
  std::vector<MultiPoly> cofactors;
  std::optional<unsigned> exponent;
  bool exponent_above_bound = false;
};

struct MembershipOptions {
  StepBudget* budget = nullptr;
  bool certificates = false;
};

/// p in (gens)? Decided by the normal form modulo a reduced basis.
MembershipCertificate ideal_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                       const MonomialOrder& order, const MembershipOptions& options = {});

/// Same test against a precomputed basis; certificates need a basis built
/// with tracked cofactors.
MembershipCertificate ideal_membership(const MultiPoly& p, const GroebnerBasis& basis, bool certificates = false,
                                       StepBudget* budget = nullptr);

struct RadicalOptions {
  StepBudget* budget = nullptr;
  /// Also search the least N with p^N in the ideal.
  bool want_exponent = false;
  unsigned max_exponent = 64;
  bool certificates = false;
};

/// p in sqrt(gens)? Adjoins a fresh variable t and tests whether
/// gens + (1 - t p) is the unit ideal.
MembershipCertificate radical_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                         const MonomialOrder& order, const RadicalOptions& options = {});

inline MembershipCertificate radical_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                                const RadicalOptions& options = {}) {
  return radical_membership(p, gens, MonomialOrder::grevlex(p.nvars()), options);
}

/// Generators of the Rabinowitsch ideal gens + (1 - t p) in one more variable.
std::vector<MultiPoly> rabinowitsch_generators(const MultiPoly& p, const std::vector<MultiPoly>& gens);

/// Order for the Rabinowitsch ring: t becomes the largest variable, the
/// original variables keep their relative order. The unit-ideal test does
/// not depend on this choice; with t first, lex eliminates t and stays fast.
MonomialOrder rabinowitsch_order(const MonomialOrder& order);

/// Least N <= max_exponent with p^N in the ideal of `basis`, found by
/// doubling and then bisecting; nullopt when none is found.
std::optional<unsigned> radical_exponent(const MultiPoly& p, const GroebnerBasis& basis, unsigned max_exponent,
                                         StepBudget* budget = nullptr);

}  // namespace alvero
