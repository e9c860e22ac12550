#include "alvero/monomial.hpp"

#include <limits>

namespace alvero {

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw std::invalid_argument("exponent count differs from variable count");
  std::size_t j = 0;
  for (unsigned e : exps) set(j++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t j, unsigned e) {
  if (j >= nvars_) throw std::out_of_range("monomial variable index");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[j] + e;
  exps_[j] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::weighted_degree() const noexcept {
  unsigned w = 0;
  for (std::size_t j = 0; j < nvars_; ++j) w += static_cast<unsigned>(j + 1) * exps_[j];
  return w;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t j = 0; j < nvars_; ++j) {
    if (exps_[j] > other.exps_[j]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t j = 0; j < nvars_; ++j) {
    if (exps_[j] != 0 && other.exps_[j] != 0) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const noexcept {
  int found = -1;
  for (std::size_t j = 0; j < nvars_; ++j) {
    if (exps_[j] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(j);
  }
  return found;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t j = 0; j < nvars_; ++j) {
    const unsigned e = exps_[j] + other.exps_[j];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    exps_[j] = static_cast<std::uint16_t>(e);
  }
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial q = *this;
  for (std::size_t j = 0; j < nvars_; ++j) q.exps_[j] = static_cast<std::uint16_t>(exps_[j] - divisor.exps_[j]);
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) {
    r.exps_[j] = std::max(exps_[j], other.exps_[j]);
    r.degree_ += r.exps_[j];
  }
  return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a monomial");
  Monomial r = *this;
  r.nvars_ = static_cast<std::uint8_t>(check_count(nvars));
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t j = 0; j < nvars_; ++j) h = h * 1000003u ^ exps_[j];
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
  }
  return 0;
}

}  // namespace alvero
