#include <doctest.h>

#include <random>

#include "walg/scalar.hpp"

using namespace walg;

namespace {

// Random element of Q(k) with small numerator and denominator degrees.
Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rational> c(deg(rng) + 1);
      for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
      UPoly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return Scalar(poly(false), poly(true));
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("field axioms on random elements of Q(k)") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("normal form has monic denominator and no common factor") {
    const Scalar k = Scalar::k();
    Scalar x = (k * k - Scalar(1)) / (Scalar(2) * k - Scalar(2));
    CHECK(x == (k + Scalar(1)) / Scalar(2));
    CHECK(x.is_polynomial());
    Scalar y = Scalar(3) / (Scalar(2) * k + Scalar(4));
    CHECK(y.den() == UPoly::linear(1, 2));
    CHECK(y.num() == UPoly(Rational(3, 2)));
  }

  TEST_CASE("evaluation agrees with arithmetic") {
    std::mt19937 rng(7);
    const Rational k0(5, 3);
    for (int trial = 0; trial < 100; ++trial) {
      Scalar a = random_scalar(rng), b = random_scalar(rng);
      try {
        Rational ea = a.eval(k0), eb = b.eval(k0);
        CHECK((a + b).eval(k0) == ea + eb);
        CHECK((a * b).eval(k0) == ea * eb);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtEvaluationPoint);
      }
    }
  }

  TEST_CASE("poles and errors") {
    const Scalar k = Scalar::k();
    Scalar x = Scalar(1) / (k + Scalar(2));
    CHECK_THROWS_AS(x.eval(Rational(-2)), Error);
    try {
      x.eval(Rational(-2));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleAtEvaluationPoint);
    }
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
    PoleSet allowed{UPoly::linear(1, 2)};
    CHECK(allowed.admits(UPoly::linear(1, 2) * UPoly::linear(1, 2)));
    CHECK_FALSE(allowed.admits(UPoly::linear(1, 3)));
    CHECK_THROWS_AS(Scalar(UPoly(1), UPoly::linear(1, 3), allowed), Error);
  }

  TEST_CASE("string round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      Scalar a = random_scalar(rng);
      CHECK(Scalar::from_string(a.str()) == a);
    }
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(parse_rational("k+1"), Error);
  }

  TEST_CASE("render level prints values and rejects poles") {
    const Scalar k = Scalar::k();
    set_render_level(Rational(1, 2));
    CHECK((k + Scalar(1)).str() == "3/2");
    CHECK_THROWS_AS((Scalar(1) / (k - Scalar(Rational(1, 2)))).str(), Error);
    set_render_level(std::nullopt);
    CHECK((k + Scalar(1)).str() != "3/2");
  }

  TEST_CASE("polynomial gcd and division") {
    UPoly a = UPoly::linear(1, 1) * UPoly::linear(1, -2), b = UPoly::linear(1, -2) * UPoly::linear(2, 3);
    CHECK(UPoly::gcd(a, b) == UPoly::linear(1, -2));
    UPoly q, r;
    UPoly::divmod(a * b + UPoly(5), a, q, r);
    CHECK(q == b);
    CHECK(r == UPoly(5));
  }
}
