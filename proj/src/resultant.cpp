#include "alvero/resultant.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace alvero {

PolyMatrix sylvester_matrix(const UniPoly& f, const UniPoly& g) {
  if (f.nvars() != g.nvars()) throw AmbientMismatch("Sylvester matrix of polynomials over different rings");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("Sylvester matrix of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 && n < 1) throw std::invalid_argument("Sylvester matrix needs a non-constant input");
  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, f.nvars());
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = f.coeff(static_cast<std::size_t>(m - k));
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = g.coeff(static_cast<std::size_t>(n - k));
  }
  return s;
}

MultiPoly bareiss_determinant(PolyMatrix a, StepBudget* budget) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly::constant(a.nvars(), 1);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(a.nvars(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return MultiPoly(a.nvars());
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(r, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (budget != nullptr) {
          budget->charge(a(i, j).size() * a(k, k).size() + a(i, k).size() * a(k, j).size() + 1, "determinant");
        }
        MultiPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = prev.is_constant() ? num * (1 / prev.leading().coeff) : num.exact_div(prev);
      }
      a(i, k) = MultiPoly(a.nvars());
    }
    prev = a(k, k);
  }
  MultiPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

MultiPoly resultant(const UniPoly& f, const UniPoly& g, StepBudget* budget) {
  if (f.degree() < 1 || g.degree() < 1) throw std::invalid_argument("resultant needs inputs of degree at least 1");
  return bareiss_determinant(sylvester_matrix(f, g), budget);
}

ResultantFamily casas_resultants(int d, StepBudget* budget, unsigned jobs) {
  if (d < 2) throw std::invalid_argument("resultant family needs degree at least 2, got " + std::to_string(d));
  const UniPoly f = generic_casas_polynomial(d);
  ResultantFamily family{d, std::vector<MultiPoly>(static_cast<std::size_t>(d - 1))};
  auto member = [&](int i) { return resultant(f, hasse_derivative(f, i), budget); };
  if (jobs <= 1) {
    for (int i = 1; i < d; ++i) family.members[static_cast<std::size_t>(i - 1)] = member(i);
    return family;
  }
  for (int start = 1; start < d; start += static_cast<int>(jobs)) {
    std::vector<std::future<MultiPoly>> batch;
    for (int i = start; i < d && i < start + static_cast<int>(jobs); ++i) {
      batch.push_back(std::async(std::launch::async, member, i));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      family.members[static_cast<std::size_t>(start - 1) + k] = batch[k].get();
    }
  }
  return family;
}

}  // namespace alvero
