#include "alvero/realroots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace alvero {

namespace {

// Parlett-Reinsch balancing by powers of two; similarity transform, so the
// eigenvalues are unchanged and their sensitivity usually drops.
void balance(Eigen::MatrixXd& a) {
  constexpr double kRadix = 2.0;
  constexpr double kSqrRadix = kRadix * kRadix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      double g = r / kRadix;
      double f = 1;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kSqrRadix;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kSqrRadix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// A few exact-arithmetic Newton steps on a simple root; a step is kept only
// while it shrinks |p|.
double newton_polish(const QPoly& p, const QPoly& slope, double x) {
  Rational at(x);
  Rational value = abs(p(at));
  for (int it = 0; it < 4 && value != 0; ++it) {
    const Rational d = slope(at);
    if (d == 0) break;
    const Rational next(Rational(at - p(at) / d).get_d());
    const Rational next_value = abs(p(next));
    if (!(next_value < value)) break;
    at = next;
    value = next_value;
  }
  return at.get_d();
}

// Eigenvalues of the balanced companion matrix of a square-free factor.
std::vector<std::complex<double>> factor_roots(const QPoly& factor) {
  const int n = factor.degree();
  if (n == 1) return {{-Rational(factor.coeff(0) / factor.leading()).get_d(), 0.0}};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) c(0, j) = -Rational(factor.coeff(static_cast<std::size_t>(n - 1 - j)) / factor.leading()).get_d();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  balance(c);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  const QPoly slope = derivative(factor);
  for (auto& z : out) {
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    z = {newton_polish(factor, slope, z.real()), z.imag()};
  }
  return out;
}

}  // namespace

RootProfile::RootProfile(std::vector<double> roots, std::vector<unsigned> multiplicities, double cluster_tol)
    : roots_(std::move(roots)), mult_(std::move(multiplicities)), cluster_tol_(cluster_tol) {
  if (roots_.size() != mult_.size()) throw std::invalid_argument("root and multiplicity counts differ");
  for (std::size_t j = 0; j < roots_.size(); ++j) {
    if (mult_[j] == 0) throw std::invalid_argument("zero multiplicity");
    if (!std::isfinite(roots_[j])) throw std::invalid_argument("non-finite root");
    if (j > 0 && !(roots_[j - 1] < roots_[j])) throw std::invalid_argument("roots must be strictly increasing");
  }
  if (cluster_tol_ < 0) throw std::invalid_argument("negative cluster tolerance");
}

RootProfile RootProfile::from_roots(std::vector<double> roots, double cluster_tol) {
  if (cluster_tol < 0) throw std::invalid_argument("negative cluster tolerance");
  std::sort(roots.begin(), roots.end());
  std::vector<double> centers;
  std::vector<unsigned> mult;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= roots.size(); ++k) {
    if (k < roots.size() && roots[k] - roots[k - 1] <= cluster_tol) continue;
    const std::size_t count = k - start;
    double mean = std::accumulate(roots.begin() + static_cast<std::ptrdiff_t>(start),
                                  roots.begin() + static_cast<std::ptrdiff_t>(k), 0.0) /
                  static_cast<double>(count);
    if (roots[start] == roots[k - 1]) mean = roots[start];  // exact repeats stay exact
    if (!centers.empty() && !(centers.back() < mean)) mean = std::nextafter(centers.back(), INFINITY);
    centers.push_back(mean);
    mult.push_back(static_cast<unsigned>(count));
    start = k;
  }
  return RootProfile(std::move(centers), std::move(mult), cluster_tol);
}

std::size_t RootProfile::degree() const noexcept { return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0}); }

std::vector<double> RootProfile::expanded() const {
  std::vector<double> out;
  for (std::size_t j = 0; j < roots_.size(); ++j) out.insert(out.end(), mult_[j], roots_[j]);
  return out;
}

CompanionRoots companion_roots(const QPoly& p, double cluster_tol) {
  if (p.degree() < 1) throw std::invalid_argument("root finding needs a polynomial of degree at least 1");
  const auto factors = squarefree_decomposition(p);
  std::vector<double> reals;
  double max_imag = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    for (const auto& z : factor_roots(factors[k])) {
      max_imag = std::max(max_imag, std::abs(z.imag()) / std::max(1.0, std::abs(z)));
      reals.insert(reals.end(), k + 1, z.real());
    }
  }
  return {RootProfile::from_roots(std::move(reals), cluster_tol), max_imag};
}

RootProfile real_roots(std::span<const double> coeffs, double cluster_tol, double imag_threshold) {
  std::vector<Rational> exact;
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coefficient");
    exact.emplace_back(c);
  }
  const QPoly p(std::move(exact));
  if (p.degree() < 1) throw std::invalid_argument("root finding needs a polynomial of degree at least 1");
  if (coeffs.back() == 0) throw std::invalid_argument("leading coefficient is zero");
  CompanionRoots r = companion_roots(p, cluster_tol);
  if (r.max_imag > imag_threshold) {
    throw NonRealRoots("polynomial has non-real roots (max |Im| = " + std::to_string(r.max_imag) + ")", r.max_imag);
  }
  return std::move(r.profile);
}

QPoly polynomial_from_roots(std::span<const double> roots) {
  std::vector<Rational> exact(roots.begin(), roots.end());
  return QPoly::from_roots(exact);
}

std::vector<double> derivative_roots(std::span<const double> roots) {
  std::vector<double> values;
  std::vector<double> mult;
  for (double r : roots) {
    if (!values.empty() && values.back() == r) {
      mult.back() += 1;
    } else {
      if (!values.empty() && r < values.back()) throw std::invalid_argument("roots must be weakly increasing");
      values.push_back(r);
      mult.push_back(1);
    }
  }
  auto phi = [&](double x) {
    double s = 0;
    for (std::size_t j = 0; j < values.size(); ++j) s += mult[j] / (x - values[j]);
    return s;
  };
  std::vector<double> out;
  out.reserve(roots.empty() ? 0 : roots.size() - 1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    out.insert(out.end(), static_cast<std::size_t>(mult[j]) - 1, values[j]);
    if (j + 1 == values.size()) break;
    double lo = values[j], hi = values[j + 1];
    for (int it = 0; it < 1100; ++it) {
      const double mid = lo + (hi - lo) / 2;
      if (!(mid > lo && mid < hi)) break;
      if (phi(mid) > 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double root = lo + (hi - lo) / 2;
    if (!(root > values[j])) root = hi;
    out.push_back(root);
  }
  return out;
}

std::vector<double> hasse_roots(std::span<const double> roots, unsigned k) {
  std::vector<double> current(roots.begin(), roots.end());
  if (k > current.size()) throw std::out_of_range("Hasse derivative order exceeds the degree");
  for (unsigned step = 0; step < k; ++step) current = derivative_roots(current);
  return current;
}

double alpha(const RootProfile& f, unsigned k, unsigned m) {
  const std::size_t d = f.degree();
  if (k < 1 || k + 1 > d) throw std::out_of_range("alpha: k must lie in 1..d-1");
  if (m < 1 || m > d - k) throw std::out_of_range("alpha: m must lie in 1..d-k");
  return hasse_roots(f.expanded(), k)[m - 1];
}

double alpha(std::span<const double> coeffs, unsigned k, unsigned m, double cluster_tol) {
  const RootProfile f = real_roots(coeffs, cluster_tol);
  const std::size_t d = f.degree();
  if (k < 1 || k + 1 > d) throw std::out_of_range("alpha: k must lie in 1..d-1");
  if (m < 1 || m > d - k) throw std::out_of_range("alpha: m must lie in 1..d-k");
  std::vector<Rational> exact;
  for (double c : coeffs) exact.emplace_back(c);
  const CompanionRoots hk = companion_roots(hasse_derivative(QPoly(std::move(exact)), k), cluster_tol);
  if (hk.max_imag > kImagThreshold) throw NonRealRoots("H_k(f) has non-real roots", hk.max_imag);
  return hk.profile.expanded()[m - 1];
}

InterlacingReport check_interlacing(const RootProfile& f, double tol) {
  if (f.degree() < 2) throw std::invalid_argument("interlacing needs degree at least 2");
  InterlacingReport report;
  report.beta = f.expanded();
  const CompanionRoots g = companion_roots(hasse_derivative(polynomial_from_roots(report.beta), 1), 0.0);
  report.gamma = g.profile.expanded();
  report.max_imag = g.max_imag;
  const std::size_t n = report.beta.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (report.gamma.size() != n) {
      report.failures.push_back(i + 1);
      continue;
    }
    const double lo = report.beta[i], hi = report.beta[i + 1], gamma = report.gamma[i];
    const bool ok = hi - lo > tol ? (lo - tol < gamma && gamma < hi + tol) : std::abs(gamma - lo) <= tol + (hi - lo);
    if (!ok) report.failures.push_back(i + 1);
  }
  return report;
}

double max_hasse_imaginary(const RootProfile& f) {
  const QPoly p = polynomial_from_roots(f.expanded());
  double worst = 0;
  for (int k = 1; k < p.degree(); ++k) {
    worst = std::max(worst, companion_roots(hasse_derivative(p, static_cast<unsigned>(k)), 0.0).max_imag);
  }
  return worst;
}

}  // namespace alvero
