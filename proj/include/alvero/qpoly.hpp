#pragma once

#include <span>
#include <utility>
#include <vector>

#include "alvero/rational.hpp"

namespace alvero {

/// Dense univariate polynomial over the rationals, coefficients from the
/// constant term up. The last stored coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  /// prod_i (x - roots[i]).
  static QPoly from_roots(std::span<const Rational> roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic gcd; zero only when both inputs are zero.
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly derivative(const QPoly& p);

/// k-th Hasse derivative, p^{(k)} / k!.
QPoly hasse_derivative(const QPoly& p, unsigned k);

/// Resultant by the Euclidean remainder sequence, with the Sylvester-matrix
/// sign convention (f rows first). Both inputs must have degree >= 1.
Rational euclidean_resultant(const QPoly& f, const QPoly& g);

/// Yun's square-free decomposition: p = c * prod_k factors[k]^(k+1) with
/// every factor monic, square-free and pairwise coprime (constant factors
/// included as 1).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

}  // namespace alvero
