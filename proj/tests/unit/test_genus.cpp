#include <doctest.h>

#include <random>

#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/genus.hpp"
#include "fixtures.hpp"

using namespace dualgraph;

TEST_CASE("adjunction vector") {
  const auto g = fixtures::b1ab2();
  const Cycle k = adjunction_vector(g);
  CHECK(k == fixtures::cycle({0, 2, 0}));  // K.E = -w + 2g + 2d - 2

  const auto c = fixtures::single_vertex(-3, 0, 1);
  CHECK(adjunction_vector(c) == fixtures::cycle({3}));  // conductor enters doubled
}

TEST_CASE("chi on fixtures") {
  SUBCASE("chi(Z) = 1 on ADE graphs") {
    for (int n = 1; n <= 10; ++n) {
      const auto g = fixtures::chain(n);
      CHECK(chi(g, fundamental_cycle(g).cycle) == 1);
    }
    const auto e8 = fixtures::dynkin_e(8);
    CHECK(chi(e8, fixtures::cycle({2, 4, 6, 5, 4, 3, 2, 3})) == 1);
  }
  SUBCASE("chi(0) = 0") {
    const auto g = fixtures::chain(2);
    CHECK(chi(g, Cycle(2)) == 0);
  }
  SUBCASE("genus-2 vertex") {
    const auto g = fixtures::single_vertex(-2, 2);
    CHECK(chi(g, fixtures::cycle({1})) == -1);
    CHECK(arithmetic_genus(g, fixtures::cycle({1})) == 2);
  }
}

TEST_CASE("arithmetic genus examples") {
  const auto e8 = fixtures::dynkin_e(8);
  CHECK(arithmetic_genus(e8, fundamental_cycle(e8).cycle) == 0);

  const auto one = fixtures::single_vertex(-2, 0);
  CHECK(arithmetic_genus(one, fixtures::cycle({1})) == 0);

  const auto g = fixtures::b1ab2();
  CHECK(arithmetic_genus(g, fixtures::cycle({1, 1, 1})) == 1);

  CHECK_THROWS_AS(arithmetic_genus(g, fixtures::cycle({1, -1, 0})), InputError);
  CHECK_THROWS_AS(arithmetic_genus(g, Cycle(3)), InputError);
}

TEST_CASE("additivity p_a(A+B) = p_a(A) + p_a(B) + A.B - 1") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Coeff> coeff(0, 3);
  for (const auto& g : {fixtures::b1ab2(), fixtures::dynkin_e(7), fixtures::case5_double()}) {
    int done = 0;
    while (done < 1000) {
      Cycle a(g.size()), b(g.size());
      for (int i = 0; i < g.size(); ++i) {
        a[i] = coeff(rng);
        b[i] = coeff(rng);
      }
      if (!a.is_effective() || !b.is_effective()) continue;
      ++done;
      const Coeff lhs = arithmetic_genus(g, a + b);
      const Coeff rhs = arithmetic_genus(g, a) + arithmetic_genus(g, b) + intersect(g, a, b) - 1;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("p_a of a reduced vertex is its genus when the conductor vanishes") {
  const auto g = fixtures::case7_fixture();
  for (int i = 0; i < g.size(); ++i)
    CHECK(arithmetic_genus(g, Cycle::unit(g.size(), i)) == g.vertex(i).genus);
}

TEST_CASE("p_a is monotone along a computation sequence") {
  for (const auto& g : {fixtures::dynkin_e(8), fixtures::case2_single(), fixtures::b1ab2()}) {
    const auto result = fundamental_cycle(g);
    Coeff prev = 0;
    bool first = true;
    for (const Cycle& step : result.sequence.cycles) {
      const Coeff pa = arithmetic_genus(g, step);
      if (!first) CHECK(pa >= prev);
      prev = pa;
      first = false;
    }
  }
}

TEST_CASE("degree and fundamental genus") {
  for (int n = 1; n <= 10; ++n) {
    const auto g = fixtures::chain(n);
    CHECK(degree(g) == 2);
    CHECK(fundamental_genus(g) == 0);
  }
  const auto one = fixtures::single_vertex(-1, 1);
  CHECK(degree(one) == 1);
  CHECK(fundamental_genus(one) == 1);

  const auto g = fixtures::b1ab2();
  CHECK(degree(g) == 2);
  CHECK(fundamental_genus(g) == 1);

  CHECK(degree(fixtures::case2_single()) == 2);
  CHECK(fundamental_genus(fixtures::case2_single()) == 2);
}
