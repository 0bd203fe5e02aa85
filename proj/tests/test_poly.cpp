#include <doctest.h>

#include "qhess/poly_io.hpp"
#include "qhess/poly_matrix.hpp"
#include "qhess/polynomial.hpp"
#include "qhess/symmetric.hpp"

using namespace qhess;

namespace {
Polynomial xv(const RegistryPtr& reg, int i) { return Polynomial::variable(reg, reg->x(i)); }
}  // namespace

TEST_CASE("registry layout and degrees") {
  auto reg = Registry::full(3);
  CHECK(reg->rank() == 3);
  // declared order: x block, q block, z block, lam
  CHECK(reg->x(1) == 0);
  CHECK(reg->x(3) == 2);
  CHECK(reg->q(1, 2) == 3);
  CHECK(reg->q(2, 3) == 5);
  CHECK(reg->z(2, 1) == 6);
  CHECK(reg->var(reg->q(1, 3)).degree == 6);
  CHECK(reg->var(reg->q(1, 2)).degree == 4);
  CHECK(reg->var(reg->z(3, 1)).degree == 4);
  CHECK(reg->var(reg->lambda_id()).degree == 2);
  CHECK(reg->find("q1_3") == reg->q(1, 3));
  CHECK(!reg->find("q3_1"));
  CHECK_THROWS_AS((void)reg->q(3, 1), std::out_of_range);
  CHECK_THROWS_AS((void)Registry::xs(3)->lambda_id(), std::out_of_range);
}

TEST_CASE("grevlex and grlex orders") {
  auto reg = Registry::xs(3);
  auto mono = [&](std::vector<Monomial::Factor> fs) { return Monomial(*reg, std::move(fs)); };
  VarId x1 = reg->x(1), x2 = reg->x(2), x3 = reg->x(3);
  std::vector<Monomial> grevlex_desc = {
      mono({{x1, 2}}), mono({{x1, 1}, {x2, 1}}), mono({{x2, 2}}),
      mono({{x1, 1}, {x3, 1}}), mono({{x2, 1}, {x3, 1}}), mono({{x3, 2}})};
  MonomialOrder grevlex{};
  for (std::size_t a = 0; a < grevlex_desc.size(); ++a)
    for (std::size_t b = a + 1; b < grevlex_desc.size(); ++b)
      CHECK(grevlex.compare(grevlex_desc[a], grevlex_desc[b]) > 0);

  MonomialOrder grlex{MonomialOrder::Kind::grlex, MonomialOrder::Grading::weighted};
  std::vector<Monomial> grlex_desc = {
      mono({{x1, 2}}), mono({{x1, 1}, {x2, 1}}), mono({{x1, 1}, {x3, 1}}),
      mono({{x2, 2}}), mono({{x2, 1}, {x3, 1}}), mono({{x3, 2}})};
  for (std::size_t a = 0; a < grlex_desc.size(); ++a)
    for (std::size_t b = a + 1; b < grlex_desc.size(); ++b)
      CHECK(grlex.compare(grlex_desc[a], grlex_desc[b]) > 0);

  // degree dominates: q1_2 (degree 4) beats x1 (degree 2) under weighted grading
  auto regq = Registry::xq(2);
  Monomial q12 = Monomial::variable(*regq, regq->q(1, 2));
  Monomial x1m = Monomial::variable(*regq, regq->x(1));
  CHECK(grevlex.compare(q12, x1m) > 0);
}

TEST_CASE("basic arithmetic") {
  auto reg = Registry::xq(2);
  Polynomial p = (xv(reg, 1) - xv(reg, 2)) * xv(reg, 1);
  CHECK(to_text(p) == "x1^2 - x1*x2");
  CHECK(p + Polynomial::zero(reg) == p);
  CHECK((p - p).is_zero());

  Polynomial q = (xv(reg, 1) + xv(reg, 2)) *
                 (xv(reg, 1) * xv(reg, 2) + Polynomial::variable(reg, reg->q(1, 2)));
  // hand expansion: x1^2 x2 + x1 x2^2 + q12 x1 + q12 x2
  Polynomial expect = parse_text(reg, "x1^2*x2 + x1*x2^2 + q1_2*x1 + q1_2*x2");
  CHECK(q == expect);
  CHECK(q.term_count() == 4);
  CHECK(q.homogeneous_degree() == std::optional<long>(6));

  Polynomial inhom = xv(reg, 1) + Polynomial::variable(reg, reg->q(1, 2));
  CHECK(!inhom.homogeneous_degree().has_value());
  CHECK(Polynomial::zero(reg).homogeneous_degree() == std::optional<long>(0));
}

TEST_CASE("registry mismatch is rejected") {
  auto a = Registry::xs(2);
  auto b = Registry::xs(2);
  CHECK_THROWS_AS(xv(a, 1) + xv(b, 1), RegistryMismatchError);
  CHECK_THROWS_AS(xv(a, 1) * xv(b, 1), RegistryMismatchError);
}

TEST_CASE("substitution") {
  auto reg = Registry::full(2);
  Polynomial z21 = Polynomial::variable(reg, reg->z(2, 1));
  std::map<VarId, Polynomial> assign;
  assign.emplace(reg->z(2, 1), xv(reg, 1));
  CHECK((z21 * z21).substitute(assign) == xv(reg, 1) * xv(reg, 1));

  // simultaneous swap does not cascade
  Polynomial p = xv(reg, 1) * pow(xv(reg, 2), 2);
  Polynomial swapped = p.swap_variables(reg->x(1), reg->x(2));
  CHECK(swapped == xv(reg, 2) * pow(xv(reg, 1), 2));

  // pass-through of unassigned variables
  Polynomial mix = z21 + xv(reg, 2);
  CHECK(mix.substitute(assign) == xv(reg, 1) + xv(reg, 2));
}

TEST_CASE("coefficient extraction") {
  auto reg = Registry::full(2);
  Polynomial lam = Polynomial::variable(reg, reg->lambda_id());
  Polynomial p = lam * lam - (xv(reg, 1) + xv(reg, 2)) * lam + xv(reg, 1) * xv(reg, 2);
  CHECK(p.coefficient_of(reg->lambda_id(), 2) == Polynomial::constant(reg, 1));
  CHECK(p.coefficient_of(reg->lambda_id(), 1) == -(xv(reg, 1) + xv(reg, 2)));
  CHECK(p.coefficient_of(reg->lambda_id(), 0) == xv(reg, 1) * xv(reg, 2));
}

TEST_CASE("serialization round trips") {
  auto reg = Registry::xq(2);
  CHECK(to_text(Polynomial::zero(reg)) == "0");
  CHECK(parse_text(reg, "0").is_zero());

  Polynomial p = parse_text(reg, "x1^2 - x1*x2 - 2*q1_2");
  CHECK(to_text(p) == "x1^2 - x1*x2 - 2*q1_2");
  CHECK(parse_text(reg, to_text(p)) == p);
  CHECK(poly_from_json(reg, poly_to_json(p)) == p);

  Polynomial frac = Polynomial::constant(reg, Rational(-3, 2)) * xv(reg, 1);
  CHECK(to_text(frac) == "-3/2*x1");
  CHECK(parse_text(reg, to_text(frac)) == frac);

  CHECK(to_text(Polynomial::constant(reg, Rational(7))) == "7");
}

TEST_CASE("parse errors carry positions") {
  auto reg = Registry::xq(2);
  CHECK_THROWS_AS(parse_text(reg, ""), ParseError);
  CHECK_THROWS_AS(parse_text(reg, "x9"), ParseError);
  CHECK_THROWS_AS(parse_text(reg, "x1 + + x2"), ParseError);
  CHECK_THROWS_AS(parse_text(reg, "2 x1"), ParseError);
  CHECK_THROWS_AS(parse_text(reg, "x1^0"), ParseError);
  try {
    parse_text(reg, "x1 + y2");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("exact division") {
  auto reg = Registry::xs(2);
  Polynomial num = xv(reg, 1) * xv(reg, 1) - xv(reg, 2) * xv(reg, 2);
  Polynomial den = xv(reg, 1) - xv(reg, 2);
  auto q = try_divide_exact(num, den);
  REQUIRE(q.has_value());
  CHECK(*q == xv(reg, 1) + xv(reg, 2));
  CHECK(!try_divide_exact(xv(reg, 1), xv(reg, 2)).has_value());
  CHECK(!try_divide_exact(num + Polynomial::constant(reg, 1), den).has_value());
}

TEST_CASE("determinants") {
  auto reg = Registry::xs(3);
  CHECK(PolyMatrix::identity(reg, 3).determinant() == Polynomial::constant(reg, 1));

  // the 2x2 e-matrix: det [[e1^(1), 1], [2 e2^(2), e1^(2)]] = x1^2 - x1 x2
  PolyMatrix m(reg, 2);
  m.set(0, 0, elementary(reg, 1, 1));
  m.set(0, 1, Polynomial::constant(reg, 1));
  m.set(1, 0, Rational(2) * elementary(reg, 2, 2));
  m.set(1, 1, elementary(reg, 1, 2));
  Polynomial det = m.determinant();
  CHECK(det == xv(reg, 1) * xv(reg, 1) - xv(reg, 1) * xv(reg, 2));
  CHECK(m.determinant(DetStrategy::bareiss) == det);

  // zero pivot requires a row swap in bareiss
  PolyMatrix swap(reg, 2);
  swap.set(0, 1, Polynomial::constant(reg, 1));
  swap.set(1, 0, Polynomial::constant(reg, 1));
  CHECK(swap.determinant(DetStrategy::bareiss) == Polynomial::constant(reg, -1));
  CHECK(swap.determinant(DetStrategy::cofactor) == Polynomial::constant(reg, -1));

  PolyMatrix singular(reg, 2);
  singular.set(0, 0, xv(reg, 1));
  singular.set(1, 0, xv(reg, 2));
  CHECK(singular.determinant(DetStrategy::bareiss).is_zero());
  CHECK(singular.determinant(DetStrategy::cofactor).is_zero());
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("-4/6") == Rational(-2, 3));
  CHECK(rational_from_string("12") == Rational(12));
  CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}
