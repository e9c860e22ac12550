#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "alvero/monomial.hpp"
#include "alvero/rational.hpp"

namespace alvero {

/// Raised when two polynomials over different variable counts meet in a
/// binary operation, or a point of the wrong length is substituted.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial in a_1, ..., a_n over the rationals.
///
/// Terms are kept sorted by decreasing grevlex order with no zero
/// coefficients, so structural equality is mathematical equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// The polynomial c * a_{var+1}.
  static MultiPoly variable(std::size_t nvars, std::size_t var, const Rational& c = 1);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Grevlex-leading term; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const noexcept;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  /// this * c * m, the basic step of every division loop.
  MultiPoly scaled(const Rational& c, const Monomial& m) const;
  MultiPoly pow(unsigned n) const;

  /// Exact quotient; throws std::domain_error when divisor does not divide.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  /// Substitutes a_{j+1} := point[j].
  Rational evaluate(std::span<const Rational> point) const;
  /// Same polynomial in a larger variable count.
  MultiPoly extended(std::size_t nvars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_same(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.monomial == b.monomial && a.coeff == b.coeff;
}

}  // namespace alvero
