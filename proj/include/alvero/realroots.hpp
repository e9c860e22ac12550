#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "alvero/qpoly.hpp"

namespace alvero {

inline constexpr double kDefaultClusterTol = 1e-7;
inline constexpr double kImagThreshold = 1e-8;

class NonRealRoots : public std::runtime_error {
 public:
  NonRealRoots(const std::string& what, double max_imag) : std::runtime_error(what), max_imag_(max_imag) {}
  double max_imag() const noexcept { return max_imag_; }

 private:
  double max_imag_;
};

/// Distinct real roots in increasing order with multiplicities.
class RootProfile {
 public:
  RootProfile() = default;
  /// Sorts `roots` and merges neighbours closer than cluster_tol (single
  /// linkage). A merged cluster is represented by its mean.
  static RootProfile from_roots(std::vector<double> roots, double cluster_tol = kDefaultClusterTol);
  /// Takes distinct values and multiplicities as given; values must be
  /// strictly increasing and multiplicities positive.
  RootProfile(std::vector<double> roots, std::vector<unsigned> multiplicities, double cluster_tol);

  std::span<const double> roots() const noexcept { return roots_; }
  std::span<const unsigned> multiplicities() const noexcept { return mult_; }
  double cluster_tol() const noexcept { return cluster_tol_; }
  std::size_t degree() const noexcept;
  std::size_t distinct() const noexcept { return roots_.size(); }
  /// Roots repeated by multiplicity, weakly increasing (the beta_1 <= ... list).
  std::vector<double> expanded() const;

 private:
  std::vector<double> roots_;
  std::vector<unsigned> mult_;
  double cluster_tol_ = kDefaultClusterTol;
};

struct CompanionRoots {
  RootProfile profile;
  double max_imag = 0;  // largest |Im| over all computed eigenvalues
};

/// Roots of an exact polynomial: exact square-free decomposition, then the
/// eigenvalues of each balanced companion matrix. Real parts are kept.
CompanionRoots companion_roots(const QPoly& p, double cluster_tol = kDefaultClusterTol);

/// Real roots of the polynomial with coefficients `coeffs` (constant term
/// first). The doubles are taken as exact rationals. Throws NonRealRoots if
/// some root has |Im| above imag_threshold * max(1, |root|), and
/// std::invalid_argument for zero-degree or zero-leading input.
RootProfile real_roots(std::span<const double> coeffs, double cluster_tol = kDefaultClusterTol,
                       double imag_threshold = kImagThreshold);

/// Exact prod (x - r) for the given double roots.
QPoly polynomial_from_roots(std::span<const double> roots);

/// Roots of p' from the weakly increasing roots of a real-rooted p: each
/// distinct root of multiplicity m stays with multiplicity m-1, and one
/// simple root is solved for in every gap from sum_j m_j / (x - r_j) = 0.
std::vector<double> derivative_roots(std::span<const double> roots);

/// Weakly increasing roots of H_k(f) for f given by its roots.
std::vector<double> hasse_roots(std::span<const double> roots, unsigned k);

/// alpha_{k,m}(f): m-th smallest root of H_k(f), with multiplicity.
/// Throws std::out_of_range unless 1 <= k <= d-1 and 1 <= m <= d-k.
double alpha(const RootProfile& f, unsigned k, unsigned m);

/// Same from coefficients; the roots of f and H_k(f) go through
/// real_roots, so non-real input throws NonRealRoots.
double alpha(std::span<const double> coeffs, unsigned k, unsigned m, double cluster_tol = kDefaultClusterTol);

struct InterlacingReport {
  std::vector<double> beta;   // roots of f, with multiplicity
  std::vector<double> gamma;  // roots of H_1(f), with multiplicity
  std::vector<std::size_t> failures;  // 1-based indices i that failed
  double max_imag = 0;
  bool ok() const { return failures.empty(); }
};

/// Checks that gamma_i lies in ]beta_i, beta_{i+1}[ (widened by tol) when
/// beta_i < beta_{i+1} - tol, and that |gamma_i - beta_i| <= tol plus the
/// cluster width when beta_i and beta_{i+1} coincide to within tol. gamma
/// comes from companion_roots on the exact H_1(f).
InterlacingReport check_interlacing(const RootProfile& f, double tol);

/// Largest |Im| over the companion roots of H_k(f), k = 1..d-1.
double max_hasse_imaginary(const RootProfile& f);

inline std::size_t count_distinct_roots(const RootProfile& p) { return p.distinct(); }

}  // namespace alvero
