#include <doctest.h>

#include "qhess/classical_f.hpp"
#include "qhess/poly_io.hpp"
#include "qhess/symmetric.hpp"

using namespace qhess;

TEST_CASE("elementary symmetric polynomials") {
  auto reg = Registry::xs(5);
  CHECK(elementary(reg, 0, 5) == Polynomial::constant(reg, 1));
  CHECK(elementary(reg, 2, 3) == parse_text(reg, "x1*x2 + x1*x3 + x2*x3"));
  CHECK(elementary(reg, 4, 3).is_zero());
  CHECK(elementary(reg, -1, 3).is_zero());
  CHECK(elementary(reg, 0, 0) == Polynomial::constant(reg, 1));
  CHECK(elementary(reg, 1, 0).is_zero());
}

TEST_CASE("complete symmetric polynomials") {
  auto reg = Registry::xs(4);
  CHECK(complete(reg, 0, 4) == Polynomial::constant(reg, 1));
  CHECK(complete(reg, 2, 2) == parse_text(reg, "x1^2 + x1*x2 + x2^2"));
  CHECK(complete(reg, -2, 4).is_zero());
  // sum_{i=0..3} (-1)^i e_i^(3) h_{3-i}^(3) = 0
  Polynomial acc(reg);
  for (int i = 0; i <= 3; ++i) {
    Polynomial t = elementary(reg, i, 3) * complete(reg, 3 - i, 3);
    acc += (i % 2 == 0) ? t : -t;
  }
  CHECK(acc.is_zero());
}

TEST_CASE("power sums") {
  auto reg = Registry::xs(3);
  CHECK(power_sum(reg, 1, 3) == parse_text(reg, "x1 + x2 + x3"));
  CHECK(power_sum(reg, 2, 2) == parse_text(reg, "x1^2 + x2^2"));
  // k e_k^(i) - sum_l (-1)^(l-1) p_l e_{k-l} = 0 at (k,i) = (2,3)
  Polynomial rhs(reg);
  for (int l = 1; l <= 2; ++l) {
    Polynomial t = power_sum(reg, l, 3) * elementary(reg, 2 - l, 3);
    rhs += (l % 2 == 1) ? t : -t;
  }
  CHECK(Rational(2) * elementary(reg, 2, 3) == rhs);
}

TEST_CASE("divided differences") {
  auto reg = Registry::xs(4);
  Polynomial x1 = Polynomial::variable(reg, reg->x(1));
  CHECK(divided_difference(x1, 1) == Polynomial::constant(reg, 1));
  CHECK(divided_difference(complete(reg, 2, 2), 2) == complete(reg, 1, 3));
  CHECK(divided_difference(classical_f(reg, 3, 2), 3) == -classical_f(reg, 2, 2));
  // symmetric input maps to zero
  CHECK(divided_difference(elementary(reg, 2, 3), 1).is_zero());
  // homogeneous degree drops by 2
  Polynomial d = divided_difference(classical_f(reg, 3, 1), 3);
  CHECK(d.homogeneous_degree() == std::optional<long>(4));
  // non-x input is rejected
  auto regq = Registry::xq(2);
  CHECK_THROWS_AS(divided_difference(Polynomial::variable(regq, regq->q(1, 2)), 1),
                  std::invalid_argument);
}

TEST_CASE("standard elementary monomials") {
  auto reg = Registry::xs(3);
  CHECK(std_elem_monomial(reg, {{0, 0, 0}}) == Polynomial::constant(reg, 1));
  CHECK(std_elem_monomial(reg, {{1, 1}}) == parse_text(reg, "x1^2 + x1*x2"));
  CHECK(std_elem_monomial(reg, {{0, 2}}) == parse_text(reg, "x1*x2"));
  CHECK(!StdElemIndex{{0, 3}}.valid());
  CHECK(StdElemIndex{{1, 2, 3}}.weighted_degree() == 12);
  CHECK_THROWS_AS(std_elem_monomial(reg, {{2}}), std::invalid_argument);

  // all indices with m = 2, total 2: (0,2) and (1,1)
  auto idxs = std_elem_indices(2, 2);
  REQUIRE(idxs.size() == 2);
  CHECK(idxs[0].levels == std::vector<int>{0, 2});
  CHECK(idxs[1].levels == std::vector<int>{1, 1});
}

TEST_CASE("expansion in standard elementary monomials") {
  auto reg = Registry::xs(3);
  Polynomial f21 = classical_f(reg, 2, 1);
  auto expansion = expand_standard(f21, 2);
  REQUIRE(expansion.size() == 2);
  CHECK(expansion.at({{1, 1}}) == Rational(1));
  CHECK(expansion.at({{0, 2}}) == Rational(-2));

  auto e23 = expand_standard(elementary(reg, 2, 3), 3);
  REQUIRE(e23.size() == 1);
  CHECK(e23.at({{0, 0, 2}}) == Rational(1));

  Polynomial x1sq = parse_text(reg, "x1^2");
  auto sq = expand_standard(x1sq, 2);
  REQUIRE(sq.size() == 2);
  CHECK(sq.at({{1, 1}}) == Rational(1));
  CHECK(sq.at({{0, 2}}) == Rational(-1));

  // x1^2 is outside the span of the m = 1 monomials
  CHECK_THROWS_AS(expand_standard(x1sq, 1), ExpansionError);
  // wrong variable range
  CHECK_THROWS_AS(expand_standard(parse_text(reg, "x3"), 2), std::invalid_argument);

  // inhomogeneous input splits by degree and reconstructs
  Polynomial mixed = f21 + elementary(reg, 1, 2);
  Polynomial back(reg);
  for (const auto& [idx, c] : expand_standard(mixed, 2))
    back += c * std_elem_monomial(reg, idx);
  CHECK(back == mixed);
}

TEST_CASE("reconstruction is the identity on small families") {
  auto reg = Registry::xs(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= i; ++j) {
      Polynomial f = classical_f(reg, i, j);
      Polynomial back(reg);
      for (const auto& [idx, c] : expand_standard(f, i))
        back += c * std_elem_monomial(reg, idx);
      CHECK(back == f);
    }
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      Polynomial e = elementary(reg, k, n);
      Polynomial back(reg);
      for (const auto& [idx, c] : expand_standard(e, n))
        back += c * std_elem_monomial(reg, idx);
      CHECK(back == e);
      Polynomial h = complete(reg, k, n);
      Polynomial hback(reg);
      for (const auto& [idx, c] : expand_standard(h, n))
        hback += c * std_elem_monomial(reg, idx);
      CHECK(hback == h);
    }
}

TEST_CASE("quantization of small polynomials") {
  auto reg = Registry::xq(3);
  CHECK(quantize(classical_f(reg, 2, 1), 2) == parse_text(reg, "x1^2 - x1*x2 - 2*q1_2"));
  CHECK(quantize(elementary(reg, 2, 2), 2) == parse_text(reg, "x1*x2 + q1_2"));
  // base family is fixed by quantization
  for (int m = 1; m <= 3; ++m) {
    Polynomial xs(reg);
    for (int k = 1; k <= m; ++k) xs += Polynomial::variable(reg, reg->x(k));
    CHECK(quantize(xs, m) == xs);
  }
}
