#pragma once

#include <cstddef>
#include <vector>

#include "alvero/budget.hpp"
#include "alvero/multipoly.hpp"
#include "alvero/unipoly.hpp"

namespace alvero {

/// Square matrix of polynomial entries, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), entries_(n * n, MultiPoly(nvars)) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return nvars_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t n_;
  std::size_t nvars_;
  std::vector<MultiPoly> entries_;
};

/// Sylvester matrix of f (degree m) and g (degree n): n rows of shifted f
/// coefficients followed by m rows of shifted g coefficients, highest power
/// leftmost. Throws std::invalid_argument when both inputs are constant or
/// either is zero; AmbientMismatch on differing rings.
PolyMatrix sylvester_matrix(const UniPoly& f, const UniPoly& g);

/// Determinant by fraction-free (Bareiss) elimination. Each entry update
/// charges the optional budget one step per term product it forms.
MultiPoly bareiss_determinant(PolyMatrix m, StepBudget* budget = nullptr);

/// det(sylvester_matrix(f, g)); both degrees must be at least 1.
MultiPoly resultant(const UniPoly& f, const UniPoly& g, StepBudget* budget = nullptr);

/// R_1, ..., R_{d-1} for the generic polynomial of degree d.
struct ResultantFamily {
  int degree = 0;
  std::vector<MultiPoly> members;  // members[i-1] = R_i
};

/// Res(f, H_i(f)) for i = 1..d-1, f the generic polynomial of degree d.
/// Members are computed on up to `jobs` threads. Throws
/// std::invalid_argument for d < 2.
ResultantFamily casas_resultants(int d, StepBudget* budget = nullptr, unsigned jobs = 1);

}  // namespace alvero
