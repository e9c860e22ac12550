#include <doctest.h>

#include <random>

#include "alvero/poly_text.hpp"
#include "alvero/rational.hpp"
#include "alvero/resultant.hpp"
#include "alvero/unipoly.hpp"
#include "support.hpp"

using namespace alvero;

namespace {

const ResultantFamily& family(int d) {
  static std::vector<ResultantFamily> cache(8);
  if (cache[static_cast<std::size_t>(d)].members.empty()) cache[static_cast<std::size_t>(d)] = casas_resultants(d);
  return cache[static_cast<std::size_t>(d)];
}

// Point (a_1, ..., a_{d-1}) whose generic polynomial is x * prod (x - r).
std::vector<Rational> point_from_roots(const std::vector<Rational>& r) {
  std::vector<Rational> roots{0};
  roots.insert(roots.end(), r.begin(), r.end());
  const QPoly f = QPoly::from_roots(roots);
  std::vector<Rational> point;
  for (int k = f.degree() - 1; k >= 1; --k) point.push_back(f.coeff(static_cast<std::size_t>(k)));
  return point;
}

}  // namespace

TEST_CASE("Sylvester matrix layout") {
  const UniPoly f = generic_casas_polynomial(2);  // x^2 + a1 x
  const UniPoly g = hasse_derivative(f, 1);        // 2x + a1
  const PolyMatrix s = sylvester_matrix(f, g);
  REQUIRE(s.size() == 3);
  const MultiPoly a1 = MultiPoly::variable(1, 0), one = MultiPoly::constant(1, 1), two = MultiPoly::constant(1, 2);
  CHECK(s(0, 0) == one);
  CHECK(s(0, 1) == a1);
  CHECK(s(0, 2).is_zero());
  CHECK(s(1, 0) == two);
  CHECK(s(1, 1) == a1);
  CHECK(s(2, 1) == two);
  CHECK(s(2, 2) == a1);

  CHECK_THROWS_AS(sylvester_matrix(UniPoly::constant(one), UniPoly::constant(two)), std::invalid_argument);
  CHECK_THROWS_AS(sylvester_matrix(f, UniPoly(1)), std::invalid_argument);
  CHECK_THROWS_AS(sylvester_matrix(f, generic_casas_polynomial(3)), AmbientMismatch);
}

TEST_CASE("small families") {
  CHECK(to_string(family(2).members.at(0)) == "-a1^2");
  CHECK(to_string(family(3).members.at(0)) == "-a1^2*a2^2 + 4*a2^3");
  CHECK(to_string(family(3).members.at(1)) == "-2*a1^3 + 9*a1*a2");
  CHECK_THROWS_AS(casas_resultants(1), std::invalid_argument);
  CHECK(casas_resultants(4, nullptr, 3).members == family(4).members);
}

TEST_CASE("budget aborts the determinant") {
  StepBudget budget(50);
  CHECK_THROWS_AS(casas_resultants(5, &budget), BudgetExceeded);
  CHECK(budget.used() > 50);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::small_int(rng, 1, 6));
    PolyMatrix m(n, 2);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = testing::random_poly(rng, 2, 2, 1);
    }
    CHECK(bareiss_determinant(m) == testing::cofactor_determinant(m));
  }
  SUBCASE("zero pivot needs a row swap") {
    PolyMatrix m(2, 1);
    m(0, 1) = MultiPoly::constant(1, 1);
    m(1, 0) = MultiPoly::constant(1, 1);
    CHECK(bareiss_determinant(m) == MultiPoly::constant(1, -1));
  }
  SUBCASE("singular") {
    PolyMatrix m(2, 1);
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = MultiPoly::variable(1, 0);
    CHECK(bareiss_determinant(m).is_zero());
  }
}

TEST_CASE("d = 2 root-product formula") {
  // R_1 = Res(f, f') = f'(0) f'(-a1) for f = x (x + a1).
  std::mt19937_64 rng(7);
  const UniPoly g = hasse_derivative(generic_casas_polynomial(2), 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Rational> pt{testing::small_rational(rng)};
    const QPoly gs = specialize(g, pt);
    CHECK(specialize(family(2).members[0], pt) == gs(Rational(0)) * gs(Rational(-pt[0])));
  }
}

TEST_CASE("root-product formula for higher degrees") {
  std::mt19937_64 rng(17);
  for (int d = 3; d <= 5; ++d) {
    const UniPoly f = generic_casas_polynomial(d);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<Rational> r = testing::random_point(rng, static_cast<std::size_t>(d - 1));
      const auto pt = point_from_roots(r);
      for (int i = 1; i < d; ++i) {
        const QPoly h = specialize(hasse_derivative(f, i), pt);
        Rational product = h(Rational(0));
        for (const auto& root : r) product *= h(root);
        CHECK(specialize(family(d).members[static_cast<std::size_t>(i - 1)], pt) == product);
      }
    }
  }
}

TEST_CASE("specialization commutes with the resultant") {
  std::mt19937_64 rng(99);
  for (int d = 2; d <= 5; ++d) {
    const UniPoly f = generic_casas_polynomial(d);
    for (int trial = 0; trial < 25; ++trial) {
      const auto pt = testing::random_point(rng, static_cast<std::size_t>(d - 1));
      const QPoly fs = specialize(f, pt);
      for (int i = 1; i < d; ++i) {
        const QPoly hs = specialize(hasse_derivative(f, i), pt);
        const Rational expected = specialize(family(d).members[static_cast<std::size_t>(i - 1)], pt);
        CHECK(euclidean_resultant(fs, hs) == expected);
        // Independent route: Gaussian elimination on the specialised matrix.
        const PolyMatrix s = sylvester_matrix(f, hasse_derivative(f, i));
        std::vector<std::vector<Rational>> num(s.size(), std::vector<Rational>(s.size()));
        for (std::size_t r = 0; r < s.size(); ++r) {
          for (std::size_t c = 0; c < s.size(); ++c) num[r][c] = s(r, c).evaluate(pt);
        }
        CHECK(testing::rational_determinant(num) == expected);
      }
    }
  }
}

TEST_CASE("resultants are isobaric of weight d(d-i)") {
  for (int d = 2; d <= 5; ++d) {
    for (int i = 1; i < d; ++i) {
      const MultiPoly& r = family(d).members[static_cast<std::size_t>(i - 1)];
      REQUIRE_FALSE(r.is_zero());
      for (const Term& t : r.terms()) CHECK(t.monomial.weighted_degree() == static_cast<unsigned>(d * (d - i)));
    }
  }
}

TEST_CASE("resultants vanish at the origin") {
  for (int d = 2; d <= 6; ++d) {
    const std::vector<Rational> origin(static_cast<std::size_t>(d - 1), Rational(0));
    for (const MultiPoly& r : family(d).members) CHECK(specialize(r, origin) == 0);
  }
}

TEST_CASE("R_i vanishes exactly where f and H_i(f) share a factor") {
  std::mt19937_64 rng(41);
  for (int d = 3; d <= 5; ++d) {
    const UniPoly f = generic_casas_polynomial(d);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> r = testing::random_point(rng, static_cast<std::size_t>(d - 1));
      if (trial % 2 == 0) r[1] = r[0];  // double root: shares a factor with H_1
      const auto pt = point_from_roots(r);
      const QPoly fs = specialize(f, pt);
      for (int i = 1; i < d; ++i) {
        const QPoly hs = specialize(hasse_derivative(f, i), pt);
        const bool common = gcd(fs, hs).degree() >= 1;
        const bool vanishes = specialize(family(d).members[static_cast<std::size_t>(i - 1)], pt) == 0;
        CHECK(common == vanishes);
        if (trial % 2 == 0 && i == 1) CHECK(vanishes);
      }
    }
  }
}
