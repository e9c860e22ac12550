#include <doctest.h>

#include <cmath>
#include <random>

#include "alvero/interlace_suite.hpp"
#include "alvero/nelder_mead.hpp"
#include "alvero/realroots.hpp"

using namespace alvero;
using doctest::Approx;

namespace {

std::vector<double> coeffs_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return c;  // constant term first
}

}  // namespace

TEST_CASE("root profiles") {
  const RootProfile p = RootProfile::from_roots({1.0, 0.0, 0.0, 1e-9, 2.0});
  REQUIRE(p.distinct() == 3);
  CHECK(p.multiplicities()[0] == 3);
  CHECK(p.roots()[0] == Approx(1e-9 / 3));
  CHECK(p.degree() == 5);
  CHECK(p.expanded().size() == 5);
  CHECK(RootProfile::from_roots({0.0, 0.0, 1.0}).roots()[0] == 0.0);
  CHECK(count_distinct_roots(RootProfile::from_roots({0.0, 0.0, 1.0})) == 2);
  CHECK(count_distinct_roots(RootProfile::from_roots({0.5, 0.5, 0.5, 0.5})) == 1);
  CHECK_THROWS_AS(RootProfile({1.0, 0.0}, {1, 1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RootProfile({0.0}, {0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RootProfile({0.0}, {1}, -1.0), std::invalid_argument);
}

TEST_CASE("companion roots") {
  const RootProfile p = real_roots(coeffs_from_roots({0.25, 0.5, 0.5, 3.0}));
  REQUIRE(p.distinct() == 3);
  CHECK(p.roots()[0] == Approx(0.25).epsilon(1e-14));
  CHECK(p.roots()[1] == 0.5);  // exact through the square-free split
  CHECK(p.multiplicities()[1] == 2);
  CHECK(p.roots()[2] == Approx(3.0).epsilon(1e-14));

  CHECK_THROWS_AS(real_roots(std::vector<double>{1.0, 0.0, 1.0}), NonRealRoots);
  try {
    real_roots(std::vector<double>{1.0, 0.0, 1.0});
  } catch (const NonRealRoots& e) {
    CHECK(e.max_imag() == Approx(1.0));
  }
  CHECK_THROWS_AS(real_roots(std::vector<double>{2.0}), std::invalid_argument);
  CHECK_THROWS_AS(real_roots(std::vector<double>{1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(real_roots(std::vector<double>{1.0, NAN}), std::invalid_argument);
}

TEST_CASE("derivative roots from the secular equation") {
  const auto g = derivative_roots(std::vector<double>{0.0, 1.0, 2.0});
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Approx(1 - 1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(g[1] == Approx(1 + 1 / std::sqrt(3.0)).epsilon(1e-15));
  const auto h = derivative_roots(std::vector<double>{0.0, 0.0, 1.0});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == 0.0);
  CHECK(h[1] == Approx(2.0 / 3).epsilon(1e-15));
  CHECK(derivative_roots(std::vector<double>{0.0, 0.0, 0.0}) == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(derivative_roots(std::vector<double>{1.0, 0.0}), std::invalid_argument);
  CHECK(hasse_roots(std::vector<double>{0.0, 1.0}, 2).empty());
  CHECK_THROWS_AS(hasse_roots(std::vector<double>{0.0, 1.0}, 3), std::out_of_range);
}

TEST_CASE("interlacing examples") {
  const auto r = check_interlacing(RootProfile::from_roots({0.0, 1.0, 2.0}), 1e-8);
  CHECK(r.ok());
  CHECK(r.gamma[0] == Approx(0.42265).epsilon(1e-5));
  CHECK(r.gamma[1] == Approx(1.57735).epsilon(1e-5));
  const auto eq = check_interlacing(RootProfile::from_roots({0.0, 0.0, 1.0}), 1e-8);
  CHECK(eq.ok());
  CHECK(eq.gamma[0] == 0.0);
  CHECK(eq.gamma[1] == Approx(2.0 / 3));
  const auto flat = check_interlacing(RootProfile::from_roots({0.0, 0.0, 0.0, 0.0}), 1e-8);
  CHECK(flat.ok());
  for (double g : flat.gamma) CHECK(g == 0.0);
  CHECK_THROWS_AS(check_interlacing(RootProfile::from_roots({0.5}), 1e-8), std::invalid_argument);
}

TEST_CASE("alpha values") {
  const RootProfile f = RootProfile::from_roots({0.0, 0.0, 1.0, 2.0});
  CHECK(alpha(f, 1, 1) == 0.0);
  CHECK_THROWS_AS(alpha(f, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(alpha(f, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(alpha(f, 2, 3), std::out_of_range);
  // H_3(f) = 4x - 3 for f = x^2 (x - 1)(x - 2).
  CHECK(alpha(f, 3, 1) == Approx(0.75).epsilon(1e-15));

  SUBCASE("secular and companion routes agree") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> roots;
      const int d = 2 + static_cast<int>(rng() % 7);
      for (int k = 0; k < d; ++k) roots.push_back(std::round(u(rng) * 64) / 64);  // dyadic, so exact repeats
      const RootProfile prof = RootProfile::from_roots(roots, 0.0);
      const auto coeffs = coeffs_from_roots(prof.expanded());
      for (unsigned k = 1; k < static_cast<unsigned>(d); ++k) {
        for (unsigned m = 1; m + k <= static_cast<unsigned>(d); ++m) {
          CHECK(alpha(prof, k, m) == Approx(alpha(coeffs, k, m, 0.0)).epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("alpha is weakly increasing in m and scales with the roots") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots;
    const int d = 2 + static_cast<int>(rng() % 9);
    for (int k = 0; k < d; ++k) roots.push_back(u(rng));
    if (trial % 4 == 0) roots[1] = roots[0];
    const RootProfile f = RootProfile::from_roots(roots, 0.0);
    const double c = 0.1 + 5 * u(rng);
    std::vector<double> scaled;
    for (double r : f.expanded()) scaled.push_back(c * r);
    const RootProfile g = RootProfile::from_roots(scaled, 0.0);
    for (unsigned k = 1; k < static_cast<unsigned>(d); ++k) {
      for (unsigned m = 1; m + k <= static_cast<unsigned>(d); ++m) {
        if (m > 1) CHECK(alpha(f, k, m - 1) <= alpha(f, k, m));
        const double a = alpha(f, k, m);
        CHECK(alpha(g, k, m) == Approx(c * a).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("first positive roots of successive derivatives are nested") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = 2 + static_cast<unsigned>(rng() % 4);
    std::vector<double> roots(m, 0.0);
    const int extra = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) roots.push_back(u(rng));
    std::sort(roots.begin(), roots.end());
    double previous = roots[m];
    for (unsigned l = 1; l + 1 <= m; ++l) {
      const auto h = hasse_roots(roots, l);
      const double first = *std::find_if(h.begin(), h.end(), [](double x) { return x > 0; });
      CHECK(first < previous);
      CHECK(first > 0);
      previous = first;
    }
  }
}

TEST_CASE("interlacing corpus") {
  const auto corpus = interlacing_corpus(60, 3);
  CHECK(corpus.size() == 60);
  std::size_t repeats = 0;
  for (const auto& r : corpus) {
    CHECK(r.size() >= 2);
    CHECK(r.size() <= 10);
    CHECK(std::is_sorted(r.begin(), r.end()));
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) ++repeats;
  }
  CHECK(repeats >= 20);
  CHECK(interlacing_corpus(60, 3) == corpus);
  CHECK(interlacing_corpus(0, 3).empty());

  const InterlaceSummary s = run_interlace_suite(200, 5);
  CHECK(s.ok());
  CHECK(s.with_repeats > 0);
  CHECK(s.worst_imag < kImagThreshold);
  CHECK(run_interlace_suite(0, 1).ok());
}

TEST_CASE("Nelder-Mead on smooth test functions") {
  const auto rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.max_evaluations = 5000;
  opts.value_tolerance = 1e-20;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, opts);
  CHECK(r.value < 1e-10);
  CHECK(r.point[0] == Approx(1.0).epsilon(1e-4));
  CHECK(r.evaluations <= 5000);
  const auto again = nelder_mead(rosen, {-1.2, 1.0}, opts);
  CHECK(again.point == r.point);

  const auto sphere = [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; };
  opts.target = 1e-12;
  CHECK(nelder_mead(sphere, {1, 2, 3}, opts).value <= 1e-12);
}
