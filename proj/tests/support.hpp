#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "alvero/multipoly.hpp"
#include "alvero/qpoly.hpp"
#include "alvero/resultant.hpp"

namespace testing {

using alvero::Monomial;
using alvero::MultiPoly;
using alvero::PolyMatrix;
using alvero::QPoly;
using alvero::Rational;

inline int small_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// n/d with |n| <= 9 and 1 <= d <= 5.
inline Rational small_rational(std::mt19937_64& rng) {
  Rational q(small_int(rng, -9, 9), small_int(rng, 1, 5));
  q.canonicalize();
  return q;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(small_rational(rng));
  return p;
}

/// Up to `terms` terms with exponents at most `max_exp`.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int max_exp) {
  std::vector<alvero::Term> ts;
  const int count = small_int(rng, 0, terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) m.set(v, static_cast<unsigned>(small_int(rng, 0, max_exp)));
    ts.push_back({m, small_rational(rng)});
  }
  return MultiPoly::from_terms(nvars, std::move(ts));
}

inline QPoly random_qpoly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k < degree; ++k) c.push_back(small_rational(rng));
  Rational lead = small_rational(rng);
  if (lead == 0) lead = 1;
  c.push_back(lead);
  return QPoly(std::move(c));
}

/// Laplace expansion along the first row; the independent determinant oracle.
inline MultiPoly cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  MultiPoly det(m.nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, m.nvars());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) minor(r - 1, cc++) = m(r, k);
      }
    }
    MultiPoly term = m(0, c) * cofactor_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Rational determinant by Gaussian elimination, for specialised matrices.
inline Rational rational_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
  }
  return det;
}

}  // namespace testing
