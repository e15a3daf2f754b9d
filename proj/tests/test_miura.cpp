#include <doctest.h>

#include "walg/miura.hpp"

using namespace walg;

TEST_SUITE("miura") {
  TEST_CASE("gl2 generators by hand") {
    auto W = principal_generators(2);
    TablePtr t = W[1].table();
    FieldState h1 = FieldState::gen(t, "h1"), h2 = FieldState::gen(t, "h2");
    CHECK(W[0] == FieldState::one(t));
    CHECK(W[1] == h1 + h2);
    CHECK(W[2] == normal_order(h1, h2) + (Scalar::k() + Scalar(1)) * derive(h2));
  }

  TEST_CASE("classical shadows are elementary symmetric") {
    for (int N = 2; N <= 4; ++N) {
      TablePtr t = principal_table(N);
      std::vector<std::string> names;
      for (int i = 1; i <= N; ++i) names.push_back("h" + std::to_string(i));
      auto W = principal_generators(t, names, Scalar::k() + Scalar(N - 1));
      for (int i = 1; i <= N; ++i) {
        CHECK(classical_shadow(W[i]) == elementary_symmetric(t, names, i));
        CHECK(W[i].homogeneous());
        CHECK(W[i].twice_weights() == std::vector<int>{2 * i});
      }
    }
  }

  TEST_CASE("multi-factor products fold from the right") {
    TablePtr t = principal_table(3);
    const Scalar c = Scalar::k() + Scalar(2);
    auto f = [&](const char* n) { return MiuraOperator::first_order(FieldMatrix::scalar(FieldState::gen(t, n)), c); };
    MiuraOperator a = f("h1"), b = f("h2"), d = f("h3");
    CHECK(opmul({a, b, d}).coeffs == opmul(a, opmul(b, d)).coeffs);
  }

  TEST_CASE("rectangular generators have the expected weights") {
    auto W = rectangular_generators(2, 2);
    REQUIRE(W.size() == 3);
    for (int m = 1; m <= 2; ++m)
      for (const auto& x : W[m].e)
        if (!x.is_zero()) CHECK(x.twice_weights() == std::vector<int>{2 * m});
  }

  TEST_CASE("subregular generators") {
    SubregularFields f = subregular_generators(3, 3);
    CHECK(f.H.homogeneous());
    CHECK(f.E.homogeneous());
    CHECK(f.F.homogeneous());
    CHECK_THROWS_AS(subregular_generators(3, 1), Error);
    CHECK_THROWS_AS(subregular_generators(3, 4), Error);
  }

  TEST_CASE("Virasoro element of gl2") {
    VirasoroResult v = virasoro_extraction();
    CHECK(v.report.passed());
    const Scalar k = Scalar::k();
    CHECK(v.central_charge == (Scalar(-6) * k * k - Scalar(10) * k - Scalar(2)) / (k + Scalar(2)));
    // T_(3)T = C/2, T_(1)T = 2T, T_(0)T = DT
    CHECK(nth_product(v.T, 3, v.T) == FieldState::scalar(v.T.table(), v.central_charge / Scalar(2)));
    CHECK(nth_product(v.T, 1, v.T) == Scalar(2) * v.T);
    CHECK(nth_product(v.T, 0, v.T) == derive(v.T));
    CHECK(nth_product(v.T, 2, v.T).is_zero());
  }
}
