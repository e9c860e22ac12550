#include "alvero/unipoly.hpp"

#include <stdexcept>
#include <string>

namespace alvero {

UniPoly::UniPoly(std::size_t nvars, std::vector<MultiPoly> coeffs) : nvars_(nvars), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.nvars() != nvars_) throw AmbientMismatch("coefficient has wrong variable count");
  }
  trim();
}

UniPoly UniPoly::monomial(std::size_t nvars, unsigned k, const MultiPoly& c) {
  if (c.nvars() != nvars) throw AmbientMismatch("coefficient has wrong variable count");
  std::vector<MultiPoly> coeffs(k + 1, MultiPoly(nvars));
  coeffs[k] = c;
  return UniPoly(nvars, std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::check_same(const UniPoly& other) const {
  if (nvars_ != other.nvars_) throw AmbientMismatch("univariate polynomials over different coefficient rings");
}

MultiPoly UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : MultiPoly(nvars_); }

bool UniPoly::is_monic() const { return !is_zero() && leading() == MultiPoly::constant(nvars_, 1); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  check_same(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), MultiPoly(nvars_));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  check_same(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), MultiPoly(nvars_));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.nvars_);
  std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.nvars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.nvars_, std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c *= s;
  r.trim();
  return r;
}

UniPoly generic_casas_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1, got " + std::to_string(d));
  const auto nvars = static_cast<std::size_t>(d - 1);
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(d) + 1, MultiPoly(nvars));
  coeffs[static_cast<std::size_t>(d)] = MultiPoly::constant(nvars, 1);
  for (int k = 1; k <= d - 1; ++k) {
    coeffs[static_cast<std::size_t>(d - k)] = MultiPoly::variable(nvars, static_cast<std::size_t>(k - 1));
  }
  return UniPoly(nvars, std::move(coeffs));
}

UniPoly hasse_derivative(const UniPoly& f, int i) {
  if (i < 0 || i > f.degree()) {
    throw std::invalid_argument("Hasse derivative order " + std::to_string(i) + " outside [0, " +
                                std::to_string(f.degree()) + "]");
  }
  const auto order = static_cast<unsigned>(i);
  std::vector<MultiPoly> coeffs;
  for (std::size_t k = order; k < f.coeffs().size(); ++k) {
    coeffs.push_back(f.coeffs()[k] * Rational(binomial(static_cast<unsigned>(k), order)));
  }
  return UniPoly(f.nvars(), std::move(coeffs));
}

UniPoly derivative(const UniPoly& f) {
  if (f.degree() < 1) return UniPoly(f.nvars());
  return hasse_derivative(f, 1);
}

QPoly specialize(const UniPoly& f, std::span<const Rational> point) {
  if (point.size() != f.nvars()) throw AmbientMismatch("point length differs from variable count");
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& m : f.coeffs()) c.push_back(m.evaluate(point));
  return QPoly(std::move(c));
}

}  // namespace alvero
