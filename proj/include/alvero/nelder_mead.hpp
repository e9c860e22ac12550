#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace alvero {

struct NelderMeadOptions {
  std::size_t max_evaluations = 20000;
  double initial_step = 0.1;
  /// Stop once the spread of objective values across the simplex falls
  /// below this, or the best value drops under `target`.
  double value_tolerance = 1e-30;
  double target = 0;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0;
  std::size_t evaluations = 0;
};

/// Standard Nelder-Mead simplex (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). Deterministic for a given start.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                                    std::vector<double> start, const NelderMeadOptions& opts = {}) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  if (n == 0) {
    result.value = objective(start);
    result.evaluations = 1;
    result.point = std::move(start);
    return result;
  }
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
  std::vector<double> values(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return objective(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto blend = [&](std::vector<double>& out, const std::vector<double>& from, double t) {
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (from[k] - centroid[k]);
  };
  while (evals < opts.max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (values[best] <= opts.target || values[worst] - values[best] <= opts.value_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    blend(trial, simplex[worst], -1.0);
    const double fr = eval(trial);
    if (fr < values[best]) {
      blend(trial2, simplex[worst], -2.0);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    blend(trial2, outside ? trial : simplex[worst], 0.5);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      values[i] = eval(simplex[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.point = simplex[best];
  result.value = values[best];
  result.evaluations = evals;
  return result;
}

}  // namespace alvero
