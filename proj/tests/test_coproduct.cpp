#include <doctest.h>

#include <functional>

#include "walg/coproduct.hpp"

using namespace walg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("coproduct") {
  TEST_CASE("principal and rectangular factorization") {
    for (int after : {1, 2}) {
      SplitReport s = factorization_check(Pyramid::parse("1,1,1"), after);
      CHECK(s.report.passed());
      CHECK(s.delta.size() == 3);
    }
    CHECK(factorization_check(Pyramid::parse("2,2"), 1).report.passed());
  }

  TEST_CASE("Miura compatibility") {
    CHECK(miura_compatibility_check(Pyramid::parse("1,1,1"), 1).report.passed());
    CHECK(miura_compatibility_check(Pyramid::parse("1,1,1,1"), 2).report.passed());
    CHECK(miura_compatibility_check(Pyramid::parse("2,2"), 1).report.passed());
  }

  TEST_CASE("coassociativity") {
    CHECK(coassociativity_check(Pyramid::parse("1,1,1"), 1, 2).report.passed());
    CHECK(coassociativity_check(Pyramid::parse("1,1,1"), 2, 1).report.passed());
    CHECK(coassociativity_check(Pyramid::parse("1,3,2,1"), 1, 2).report.passed());
    CHECK(coassociativity_check(Pyramid::parse("1,3,2,1"), 2, 3).report.passed());
  }

  TEST_CASE("levels satisfy k + N = k_t + N_t") {
    SplitReport s = factorization_check(Pyramid::parse("1,1,1"), 1);
    REQUIRE(s.levels.size() == 3);
    CHECK(s.levels[0].second == Scalar::k());
    CHECK(s.levels[1].second == Scalar::k() + Scalar(2));
    CHECK(s.levels[2].second == Scalar::k() + Scalar(1));
    CHECK(shift_level(Scalar::k() * Scalar::k(), Rational(1)) == (Scalar::k() + Scalar(1)) * (Scalar::k() + Scalar(1)));
  }

  TEST_CASE("subregular coproduct identities") {
    CHECK(subregular_coproduct_check(3, 2).report.passed());
    CHECK(subregular_coproduct_check(4, 2).report.passed());
    CHECK(subregular_coproduct_check(4, 3).report.passed());
  }

  TEST_CASE("binomial identity") {
    for (int n = 1; n <= 4; ++n) CHECK(binomial_identity_check(n).passed());
  }

  TEST_CASE("input errors") {
    CHECK(code_of([] { coassociativity_check(Pyramid::parse("1,1,1"), 1, 1); }) == ErrorCode::InvalidColumn);
    CHECK(code_of([] { coassociativity_check(Pyramid::parse("1,1,1"), 1, 3); }) == ErrorCode::InvalidColumn);
    CHECK(code_of([] { factorization_check(Pyramid::parse("1,1,1"), 3); }) == ErrorCode::InvalidColumn);
    CHECK(code_of([] { factorization_check(Pyramid::parse("1,2,1"), 1); }) == ErrorCode::InvalidShape);
    CHECK(code_of([] { subregular_coproduct_check(3, 1); }) == ErrorCode::BadSplit);
    CHECK(code_of([] { binomial_identity_check(7); }) == ErrorCode::SizeBound);
    CHECK(code_of([] { binomial_identity_check(0); }) == ErrorCode::InvalidArgument);
  }
}
