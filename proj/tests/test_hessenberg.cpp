#include <doctest.h>

#include "qhess/hessenberg.hpp"

using namespace qhess;

TEST_CASE("validation") {
  auto ok = HessenbergFunction::check({3, 4, 4, 5, 5});
  CHECK(std::holds_alternative<HessenbergFunction>(ok));

  auto monotone = HessenbergFunction::check({2, 1, 3});
  REQUIRE(std::holds_alternative<HessenbergViolation>(monotone));
  CHECK(std::get<HessenbergViolation>(monotone).kind == HessenbergViolation::Kind::not_monotone);
  CHECK(std::get<HessenbergViolation>(monotone).index == 2);

  auto last = HessenbergFunction::check({1, 2, 3, 3});
  REQUIRE(std::holds_alternative<HessenbergViolation>(last));
  CHECK(std::get<HessenbergViolation>(last).kind == HessenbergViolation::Kind::below_diagonal);
  CHECK(std::get<HessenbergViolation>(last).index == 4);

  auto below = HessenbergFunction::check({0, 2});
  REQUIRE(std::holds_alternative<HessenbergViolation>(below));
  CHECK(std::get<HessenbergViolation>(below).kind == HessenbergViolation::Kind::below_diagonal);
  CHECK(std::get<HessenbergViolation>(below).index == 1);

  // h that ends above n is caught by last_not_n only through the diagonal rule,
  // so use a genuinely too-large final value
  auto toobig = HessenbergFunction::check({2, 2, 2});
  REQUIRE(std::holds_alternative<HessenbergViolation>(toobig));

  CHECK_THROWS_AS(HessenbergFunction::make({2, 1, 3}), std::invalid_argument);
}

TEST_CASE("dual") {
  auto h = HessenbergFunction::make({3, 4, 4, 5, 5});
  CHECK(h.dual().values() == std::vector<int>{2, 4, 5, 5, 5});
  CHECK(h.dual().dual() == h);

  auto full = HessenbergFunction::full(4);
  CHECK(full.dual() == full);

  auto pet = HessenbergFunction::peterson(4);
  CHECK(pet.values() == std::vector<int>{2, 3, 4, 4});
  CHECK(pet.dual() == pet);

  for (int n = 1; n <= 6; ++n)
    for (const auto& hf : HessenbergFunction::all(n)) {
      auto d = hf.dual();
      CHECK(d.dual() == hf);
      CHECK(d.dimension() == hf.dimension());
    }
}

TEST_CASE("dimension") {
  CHECK(HessenbergFunction::full(3).dimension() == 3);
  CHECK(HessenbergFunction::identity(5).dimension() == 0);
  CHECK(HessenbergFunction::make({3, 4, 4, 5, 5}).dimension() == 6);
}

TEST_CASE("q vanishing set") {
  using Pairs = std::vector<std::pair<int, int>>;
  auto h = HessenbergFunction::make({3, 4, 4, 5, 5});
  CHECK(h.q_vanishing_set() == Pairs{{1, 3}, {1, 4}, {2, 5}, {1, 5}} ||
        h.q_vanishing_set() == Pairs{{1, 3}, {1, 4}, {1, 5}, {2, 5}});

  CHECK(HessenbergFunction::full(4).q_vanishing_set().empty());

  // Peterson function keeps exactly the adjacent quantum parameters
  CHECK(HessenbergFunction::peterson(4).q_vanishing_set() ==
        Pairs{{1, 3}, {1, 4}, {2, 4}});

  // identity function kills every q_{rs}
  auto ident = HessenbergFunction::identity(3);
  CHECK(ident.q_vanishing_set() == Pairs{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("diagram") {
  auto h = HessenbergFunction::make({1, 2});
  CHECK(h.diagram() == "##\n.#");
  CHECK(h.shaded_count() == 3);

  CHECK(HessenbergFunction::full(3).diagram() == "###\n###\n###");

  auto fig = HessenbergFunction::make({3, 4, 4, 5, 5});
  std::string grid = fig.diagram();
  auto box = [&](int i, int j) { return grid[static_cast<std::size_t>((i - 1) * 6 + (j - 1))]; };
  CHECK(box(3, 1) == '#');
  CHECK(box(4, 1) == '.');
  CHECK(box(4, 2) == '#');
  CHECK(box(5, 3) == '.');
  CHECK(box(5, 4) == '#');
  for (int n = 1; n <= 6; ++n)
    for (const auto& hf : HessenbergFunction::all(n)) {
      int expect = 0;
      for (int j = 1; j <= n; ++j) expect += hf(j);
      CHECK(hf.shaded_count() == expect);
    }
}

TEST_CASE("csv and enumeration") {
  auto h = HessenbergFunction::parse_csv("3,4,4,5,5");
  CHECK(h.to_csv() == "3,4,4,5,5");
  CHECK_THROWS_AS(HessenbergFunction::parse_csv("3,x,4"), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction::parse_csv("2,1,3"), std::invalid_argument);

  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n)
    CHECK(HessenbergFunction::all(n).size() == catalan[n]);
}
