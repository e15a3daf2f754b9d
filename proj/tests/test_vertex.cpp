#include <doctest.h>

#include "walg/oracle.hpp"
#include "walg/vertex.hpp"

using namespace walg;

namespace {

TablePtr heisenberg() {
  TableBuilder tb("test_heis");
  tb.add("b", 2);
  tb.add("c", 2);
  tb.pair2("b", "b", Scalar::k());
  tb.pair2("b", "c", Scalar(1));
  tb.pair2("c", "c", Scalar(2));
  return tb.build();
}

TablePtr beta_gamma() {
  TableBuilder tb("test_bg");
  tb.add("a", 2);
  tb.add("astar", 0);
  tb.pair1("a", "astar", LinGen{Scalar(1), {}});
  return tb.build();
}

Scalar factorial(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

}  // namespace

TEST_SUITE("vertex") {
  TEST_CASE("Heisenberg OPE") {
    TablePtr t = heisenberg();
    FieldState b = FieldState::gen(t, "b"), c = FieldState::gen(t, "c");
    CHECK(nth_product(b, 1, b) == FieldState::scalar(t, Scalar::k()));
    CHECK(nth_product(b, 0, c).is_zero());
    CHECK(nth_product(b, 1, c) == FieldState::one(t));
    CHECK(nth_product(b, 2, b).is_zero());
    // b_(1) :cc: = 2 c
    CHECK(nth_product(b, 1, normal_order(c, c)) == Scalar(2) * c);
  }

  TEST_CASE("translation: a_(-2)|0> = Da and a_(-1)|0> = a") {
    TablePtr t = heisenberg();
    FieldState x = normal_order(FieldState::gen(t, "b"), FieldState::gen(t, "c", 1));
    CHECK(nth_product(x, -1, FieldState::one(t)) == x);
    CHECK(nth_product(x, -2, FieldState::one(t)) == derive(x));
  }

  TEST_CASE("skew symmetry on composite states") {
    // b_(n)a = sum_j (-1)^(n+j+1) D^j (a_(n+j)b) / j!
    for (TablePtr t : {heisenberg(), beta_gamma()}) {
      std::vector<FieldState> xs;
      for (const auto& m : monomials_up_to(*t, 2, 3)) xs.emplace_back(t, Terms{{m, Scalar(1)}});
      for (const auto& a : xs)
        for (const auto& b : xs)
          for (int n = 0; n <= 3; ++n) {
            FieldState rhs(t);
            for (int j = 0; j <= 6; ++j) {
              FieldState p = nth_product(a, n + j, b);
              if (p.is_zero()) continue;
              Scalar sign((n + j + 1) % 2 ? -1 : 1);
              rhs += (sign / factorial(j)) * derive(p, j);
            }
            CHECK_MESSAGE(nth_product(b, n, a) == rhs, a.str(), " / ", b.str(), " n=", n);
          }
    }
  }

  TEST_CASE("normal ordering is quasi-commutative") {
    // :ab: - :ba: = sum_{j>=0} (-1)^j D^(j+1) (a_(j)b) / (j+1)!
    TablePtr t = beta_gamma();
    FieldState a = FieldState::gen(t, "a"), s = FieldState::gen(t, "astar");
    FieldState x = normal_order(a, normal_order(s, s));
    FieldState lhs = normal_order(x, a) - normal_order(a, x);
    FieldState rhs(t);
    for (int j = 0; j <= 4; ++j) {
      FieldState p = nth_product(x, j, a);
      rhs += (Scalar(j % 2 ? -1 : 1) / factorial(j + 1)) * derive(p, j + 1);
    }
    CHECK(lhs == rhs);
  }

  TEST_CASE("term grammar round trip") {
    TablePtr t = beta_gamma();
    FieldState a = FieldState::gen(t, "a"), s = FieldState::gen(t, "astar");
    FieldState x = (Scalar::k() + Scalar(1)) * normal_order(a, derive(s, 2)) - Scalar(3) * derive(a) +
                   Scalar(Rational(1, 2)) * FieldState::one(t);
    CHECK(parse_field(t, x.str()) == x);
  }

  TEST_CASE("table validation") {
    TableBuilder tb("bad");
    tb.add("a", 2);
    CHECK_THROWS_AS(tb.add("a", 2), Error);
    CHECK_THROWS_AS(tb.pair1("a", "a", LinGen{Scalar(1), {}}), Error);
    TablePtr h = heisenberg(), g = beta_gamma();
    CHECK_THROWS_AS(normal_order(FieldState::gen(h, "b"), FieldState::gen(g, "a")), Error);
  }

  TEST_CASE("substitution is a vertex algebra map") {
    // b -> a:astar: realizes a rank-one current inside beta-gamma.
    TableBuilder tb("test_u1");
    tb.add("J", 2);
    tb.pair2("J", "J", Scalar(-1));
    TablePtr u = tb.build(), g = beta_gamma();
    FieldState img = normal_order(FieldState::gen(g, "a"), FieldState::gen(g, "astar"));
    FieldState J = FieldState::gen(u, "J");
    FieldState x = normal_order(J, derive(J));
    for (int n = -1; n <= 3; ++n)
      CHECK(substitute(nth_product(J, n, x), g, {img}) == nth_product(img, n, substitute(x, g, {img})));
  }
}
