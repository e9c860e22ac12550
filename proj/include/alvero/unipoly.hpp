#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alvero/multipoly.hpp"
#include "alvero/qpoly.hpp"

namespace alvero {

/// Polynomial in x whose coefficients are MultiPoly over a shared variable
/// count. coeffs()[k] is the coefficient of x^k; the last stored
/// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::size_t nvars) : nvars_(nvars) {}
  UniPoly(std::size_t nvars, std::vector<MultiPoly> coeffs);

  /// c * x^k.
  static UniPoly monomial(std::size_t nvars, unsigned k, const MultiPoly& c);
  static UniPoly constant(const MultiPoly& c) { return monomial(c.nvars(), 0, c); }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const MultiPoly> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  MultiPoly coeff(std::size_t k) const;
  const MultiPoly& leading() const { return coeffs_.back(); }
  bool is_monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  void check_same(const UniPoly& other) const;

  std::size_t nvars_ = 0;
  std::vector<MultiPoly> coeffs_;
};

/// f = x^d + a_1 x^{d-1} + ... + a_{d-1} x over d-1 coefficient variables.
UniPoly generic_casas_polynomial(int d);

/// i-th Hasse derivative: sum_k C(k, i) coeff_k x^{k-i}.
UniPoly hasse_derivative(const UniPoly& f, int i);

/// Ordinary derivative d/dx.
UniPoly derivative(const UniPoly& f);

/// Substitutes a_{j+1} := point[j] in every coefficient.
QPoly specialize(const UniPoly& f, std::span<const Rational> point);
inline Rational specialize(const MultiPoly& p, std::span<const Rational> point) { return p.evaluate(point); }

}  // namespace alvero
