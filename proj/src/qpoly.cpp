#include "alvero/qpoly.hpp"

#include <stdexcept>

namespace alvero {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::from_roots(std::span<const Rational> roots) {
  std::vector<Rational> c{1};
  for (const auto& r : roots) {
    c.push_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return QPoly(std::move(c));
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c(coeffs_);
  const Rational lc = leading();
  for (auto& v : c) v /= lc;
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + db] / b.leading();
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

QPoly derivative(const QPoly& p) { return hasse_derivative(p, 1); }

QPoly hasse_derivative(const QPoly& p, unsigned k) {
  if (p.degree() < static_cast<int>(k)) return {};
  std::vector<Rational> c;
  for (std::size_t j = k; j < p.coeffs().size(); ++j) {
    c.emplace_back(p.coeffs()[j] * Rational(binomial(static_cast<unsigned>(j), k)));
  }
  return QPoly(std::move(c));
}

Rational euclidean_resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  Rational lc_pow = 1;
  if (n == 0) {
    for (int i = 0; i < m; ++i) lc_pow *= g.leading();
    return lc_pow;
  }
  if (m == 0) {
    for (int i = 0; i < n; ++i) lc_pow *= f.leading();
    return lc_pow;
  }
  const Rational sign = (m * n) % 2 == 0 ? 1 : -1;
  if (m < n) return sign * euclidean_resultant(g, f);
  const QPoly r = divmod(f, g).second;
  if (r.is_zero()) return 0;
  const int k = r.degree();
  for (int i = 0; i < m - k; ++i) lc_pow *= g.leading();
  return sign * lc_pow * euclidean_resultant(g, r);
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<QPoly> factors;
  const QPoly monic_p = p.monic();
  const QPoly dp = derivative(monic_p);
  const QPoly a0 = gcd(monic_p, dp);
  QPoly b = divmod(monic_p, a0).first;
  QPoly d = divmod(dp, a0).first - derivative(b);
  while (b.degree() > 0) {
    QPoly a = gcd(b, d);
    b = divmod(b, a).first;
    d = divmod(d, a).first - derivative(b);
    factors.push_back(std::move(a));
  }
  return factors;
}

}  // namespace alvero
