#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace alvero {

/// Upper bound on the number of coefficient variables a_1, ..., a_n a
/// polynomial may carry. Degree 8 needs 7, the radical test adjoins one more.
inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector over a fixed number of variables. Index j holds the
/// exponent of a_{j+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(check_count(nvars)) {}
  Monomial(std::size_t nvars, std::initializer_list<unsigned> exps);

  /// The monomial a_{var+1}^power in nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t j) const noexcept { return exps_[j]; }
  void set(std::size_t j, unsigned e);

  unsigned total_degree() const noexcept { return degree_; }
  /// Degree with weight(a_j) = j.
  unsigned weighted_degree() const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  /// Index of the only variable with a nonzero exponent, or -1.
  int pure_power_variable() const noexcept;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Exact quotient; requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  /// Same exponents embedded into a larger variable count (new slots zero).
  Monomial extended(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  static std::size_t check_count(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("too many polynomial variables");
    return n;
  }

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison with a_1 > a_2 > ... ; the
/// canonical internal order of MultiPoly. Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace alvero

template <>
struct std::hash<alvero::Monomial> {
  std::size_t operator()(const alvero::Monomial& m) const noexcept { return m.hash(); }
};
