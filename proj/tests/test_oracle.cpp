#include <doctest.h>

#include "walg/acceptance.hpp"
#include "walg/oracle.hpp"

using namespace walg;

TEST_SUITE("oracle") {
  TEST_CASE("engine agrees with the mode oracle at low weight") {
    Report r = engine_oracle_check(oracle_table_heisenberg(), 2, 2, "oracle.heisenberg.small");
    CHECK(r.passed());
    Report s = engine_oracle_check(oracle_table_betagamma(), 2, 2, "oracle.betagamma.small");
    CHECK(s.passed());
  }

  TEST_CASE("oracle detects a perturbed product") {
    TablePtr t = oracle_table_betagamma();
    ModeOracle o(t);
    FieldState a = FieldState::gen(t, "a"), s = FieldState::gen(t, "astar"), h = FieldState::gen(t, "h");
    FieldState A = normal_order(a, s), B = normal_order(h, normal_order(a, s));
    for (int n = -1; n <= 2; ++n) {
      FieldState good = nth_product(A, n, B);
      Mono word = A.terms().begin()->first;
      CHECK(o.state(good) == o.apply(word, n, o.state(B)));
      FieldState bad = good + Scalar(Rational(1, 7)) * derive(h, n + 1);
      CHECK(o.state(bad) != o.apply(word, n, o.state(B)));
    }
    // A wrong constant in the self-pairing of h is caught too.
    FieldState wrong = nth_product(h, 1, h) + FieldState::one(t);
    CHECK(o.state(wrong) != o.apply(Mono{Sym{t->index("h"), 0}}, 1, o.state(h)));
  }

  TEST_CASE("oracle refuses tables with current poles") {
    TableBuilder tb("test_sl2ish");
    tb.add("x", 2);
    tb.add("y", 2);
    tb.pair1("x", "y", LinGen{Scalar(0), {{0, Scalar(1)}}});
    CHECK_THROWS_AS(ModeOracle(tb.build()), Error);
  }
}
