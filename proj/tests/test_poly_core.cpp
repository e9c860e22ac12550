#include <doctest.h>

#include <random>

#include "alvero/poly_text.hpp"
#include "alvero/qpoly.hpp"
#include "alvero/rational.hpp"
#include "alvero/unipoly.hpp"
#include "support.hpp"

using namespace alvero;

TEST_CASE("rational text") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  Rational half(-3, 6), two(4, 2);
  half.canonicalize();
  two.canonicalize();
  CHECK(to_string(half) == "-1/2");
  CHECK(to_string(two) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("monomials") {
  const Monomial a(3, {2, 1, 0}), b(3, {1, 1, 1});
  CHECK(a.total_degree() == 3);
  CHECK(a.weighted_degree() == 4);
  CHECK(b.weighted_degree() == 6);
  CHECK_FALSE(a.divides(b));
  CHECK(Monomial(3, {1, 1, 0}).divides(a));
  CHECK(a.lcm(b) == Monomial(3, {2, 1, 1}));
  CHECK((a * b) == Monomial(3, {3, 2, 1}));
  CHECK(a.divided_by(Monomial(3, {1, 0, 0})) == Monomial(3, {1, 1, 0}));
  CHECK(Monomial::variable(3, 2, 4).pure_power_variable() == 2);
  CHECK(a.pure_power_variable() == -1);
  // Equal degree: grevlex prefers the smaller exponent of the last variable.
  CHECK(grevlex_compare(a, b) > 0);
  CHECK(grevlex_compare(Monomial(2, {0, 3}), Monomial(2, {1, 1})) > 0);
  CHECK_THROWS_AS(Monomial(kMaxVars + 1), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  const std::size_t n = 3;
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly p = testing::random_poly(rng, n, 5, 3);
    const MultiPoly q = testing::random_poly(rng, n, 5, 3);
    const MultiPoly r = testing::random_poly(rng, n, 5, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * MultiPoly::constant(n, 1) == p);
    CHECK((p * MultiPoly(n)).is_zero());
    if (!q.is_zero()) CHECK((p * q).exact_div(q) == p);
    const auto point = testing::random_point(rng, n);
    CHECK((p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point));
    CHECK((p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point));
  }
}

TEST_CASE("multipoly edge cases") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK_THROWS_AS((x * x + y).exact_div(x), std::domain_error);
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), AmbientMismatch);
  CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
  CHECK((x + y).pow(0) == MultiPoly::constant(2, 1));
  CHECK(MultiPoly::constant(2, 0).is_zero());
  CHECK((x * y).total_degree() == 2);
  CHECK(x.extended(3) == MultiPoly::variable(3, 0));
  CHECK((x * x - y).leading().monomial == Monomial(2, {2, 0}));
}

TEST_CASE("text format") {
  const MultiPoly p = parse_multipoly("3*a1^2 - a2 + 1/2", 2);
  CHECK(to_string(p) == "3*a1^2 - a2 + 1/2");
  CHECK(to_string(MultiPoly(2)) == "0");
  CHECK(to_string(parse_multipoly("-a1", 1)) == "-a1");
  const UniPoly f = parse_unipoly("3*x^2 + 2*a1*x + a2", 2);
  CHECK(f.degree() == 2);
  CHECK(f.coeff(1) == parse_multipoly("2*a1", 2));
  CHECK(parse_unipoly(" 3 * x ^ 2+2*a1*x+ a2 ", 2) == f);
  CHECK(parse_unipoly("(x + a1)*(x - a1)", 1) == parse_unipoly("x^2 - a1^2", 1));
  CHECK(to_string(generic_casas_polynomial(3)) == "x^3 + a1*x^2 + a2*x");
  CHECK(max_variable_index("a3*x + a1") == 3);
  CHECK_THROWS_AS(parse_multipoly("x + a1", 1), ParseError);
  CHECK_THROWS_AS(parse_multipoly("a1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_multipoly("a3", 2), ParseError);
  CHECK_THROWS_AS(parse_multipoly("2/0", 1), std::invalid_argument);
}

TEST_CASE("print then parse is the identity on random polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = testing::random_poly(rng, 4, 6, 4);
    CHECK(parse_multipoly(to_string(p), 4) == p);
    UniPoly u(4, {testing::random_poly(rng, 4, 3, 2), testing::random_poly(rng, 4, 3, 2),
                  testing::random_poly(rng, 4, 3, 2)});
    CHECK(parse_unipoly(to_string(u), 4) == u);
  }
}

TEST_CASE("univariate rational polynomials") {
  const QPoly p = QPoly::from_roots(std::vector<Rational>{1, 1, 2});
  CHECK(p == QPoly({-2, 5, -4, 1}));
  CHECK(p(Rational(1)) == 0);
  const auto [q, r] = divmod(p, QPoly({-1, 1}));
  CHECK(q == QPoly({2, -3, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(p, derivative(p)) == QPoly({-1, 1}));
  CHECK(hasse_derivative(p, 2) == QPoly({-4, 3}));
  const auto sqf = squarefree_decomposition(p);
  REQUIRE(sqf.size() == 2);
  CHECK(sqf[0] == QPoly({-2, 1}));
  CHECK(sqf[1] == QPoly({-1, 1}));
  // Res(x^2 - 1, x - 2) = f(2) with the f-rows-first convention.
  CHECK(euclidean_resultant(QPoly({-1, 0, 1}), QPoly({-2, 1})) == 3);
  CHECK(euclidean_resultant(QPoly({-1, 0, 1}), QPoly({-1, 1})) == 0);
}

TEST_CASE("euclidean resultant swaps with sign (-1)^(mn)") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = testing::small_int(rng, 1, 5), n = testing::small_int(rng, 1, 5);
    const QPoly f = testing::random_qpoly(rng, m), g = testing::random_qpoly(rng, n);
    const Rational sign = (m * n) % 2 ? -1 : 1;
    CHECK(euclidean_resultant(f, g) == sign * euclidean_resultant(g, f));
  }
}

TEST_CASE("Hasse derivatives") {
  const UniPoly f = generic_casas_polynomial(4);
  CHECK(hasse_derivative(f, 0) == f);
  CHECK(to_string(hasse_derivative(f, 3)) == "4*x + a1");
  CHECK(hasse_derivative(f, 4) == UniPoly::constant(MultiPoly::constant(3, 1)));
  CHECK_THROWS_AS(hasse_derivative(f, 5), std::invalid_argument);
  CHECK_THROWS_AS(hasse_derivative(f, -1), std::invalid_argument);
  CHECK_THROWS_AS(generic_casas_polynomial(0), std::invalid_argument);

  SUBCASE("iterated derivative equals i! H_i on exact polynomials") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const QPoly p = testing::random_qpoly(rng, testing::small_int(rng, 1, 8));
      QPoly iterated = p;
      for (int i = 1; i <= p.degree(); ++i) {
        iterated = derivative(iterated);
        CHECK(iterated == QPoly({Rational(factorial(static_cast<unsigned>(i)))}) * hasse_derivative(p, static_cast<unsigned>(i)));
      }
    }
  }
  SUBCASE("same identity over the generic coefficients") {
    for (int d = 1; d <= 6; ++d) {
      const UniPoly g = generic_casas_polynomial(d);
      UniPoly iterated = g;
      for (int i = 1; i <= d; ++i) {
        iterated = derivative(iterated);
        CHECK(iterated == Rational(factorial(static_cast<unsigned>(i))) * hasse_derivative(g, i));
      }
    }
  }
}

TEST_CASE("specialization is a ring morphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly f(2, {testing::random_poly(rng, 2, 3, 2), testing::random_poly(rng, 2, 3, 2)});
    const UniPoly g(2, {testing::random_poly(rng, 2, 3, 2), testing::random_poly(rng, 2, 3, 2),
                        MultiPoly::constant(2, 1)});
    const auto pt = testing::random_point(rng, 2);
    CHECK(specialize(f * g, pt) == specialize(f, pt) * specialize(g, pt));
    CHECK(specialize(f + g, pt) == specialize(f, pt) + specialize(g, pt));
    CHECK(specialize(hasse_derivative(g, 1), pt) == hasse_derivative(specialize(g, pt), 1));
  }
}
