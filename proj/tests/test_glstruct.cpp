#include <doctest.h>

#include <json.hpp>

#include "walg/glstruct.hpp"

using namespace walg;

TEST_SUITE("glstruct") {
  TEST_CASE("the seven-box pyramid") {
    Pyramid p = Pyramid::parse("1,3,2,1");
    CHECK(p.size() == 7);
    CHECK(p.rows() == std::vector<int>{1, 2, 4});
    CHECK(p.row(4) == 3);
    CHECK(p.col(4) == 2);
    CHECK(p.simple_degrees() == std::vector<int>{1, 0, 0, 1, 0, 1});
    CHECK(p.nilpotent() == GlElem::unit(5, 3) + GlElem::unit(7, 6) + GlElem::unit(6, 4) + GlElem::unit(4, 1));
    CHECK(p.jordan_type() == std::vector<int>{4, 2, 1});
    CHECK(p.grading().pi_one() == std::vector<int>{1, 4, 6});
    auto j = nlohmann::json::parse(to_json(p));
    CHECK(j["N"] == 7);
    CHECK(j["rows"] == nlohmann::json::array({1, 2, 4}));
    CHECK(j["pi1"] == nlohmann::json::array({1, 4, 6}));
  }

  TEST_CASE("Jordan type of f is the transposed column list of a left-aligned pyramid") {
    for (const char* s : {"1,1,1", "2,1", "2,2", "1,2,1", "3,2,1", "1,2,2,1", "2,3,3,1"}) {
      Pyramid p = Pyramid::parse(s);
      std::vector<int> rows = p.rows();
      std::sort(rows.rbegin(), rows.rend());
      CHECK_MESSAGE(p.jordan_type() == rows, s);
      CHECK(orbit_dimension(p.jordan_type()) >= 0);
    }
  }

  TEST_CASE("bracket is a Lie bracket") {
    GlElem a = GlElem::unit(1, 2) + Scalar(3) * GlElem::unit(2, 3), b = GlElem::unit(2, 1) - GlElem::unit(3, 1),
           c = GlElem::unit(1, 3) + GlElem::unit(2, 2);
    GlElem jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac == GlElem());
    CHECK(bracket(a, b) == GlElem() - bracket(b, a));
    for (const Root& x : positive_roots(4))
      for (const Root& y : positive_roots(4))
        if (x.j == y.i) CHECK(structure_constant(x, y, Root{x.i, y.j}) == Scalar(1));
  }

  TEST_CASE("pyramid input errors") {
    CHECK_THROWS_AS(Pyramid::parse("1,x"), Error);
    CHECK_THROWS_AS(Pyramid::from_columns({}), Error);
    CHECK_THROWS_AS(Pyramid::from_columns({0, 1}), Error);
    try {
      Pyramid::from_columns({1, 3, 1, 3});
      FAIL("expected NotUnimodal");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnimodal);
    }
    try {
      split_pyramid(Pyramid::parse("1,2,1"), 3);
      FAIL("expected InvalidColumn");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidColumn);
    }
  }

  TEST_CASE("splits conserve k + N and pass the dimension identity") {
    Pyramid p = Pyramid::parse("1,3,2,1");
    for (int after = 1; after <= 3; ++after) {
      PyramidSplit s = split_pyramid(p, after);
      CHECK(s.left.size() + s.right.size() == 7);
      CHECK(s.levels.k1 + Scalar(s.levels.N1) == Scalar::k() + Scalar(7));
      CHECK(s.levels.k2 + Scalar(s.levels.N2) == Scalar::k() + Scalar(7));
      CHECK(induced_orbit_check(p, after).passed());
    }
    CHECK(induced_orbit_check(Pyramid::parse("2,1"), std::vector<int>{2, 1}).passed());
    // Removing alpha_1, of degree 0, violates the precondition.
    CHECK(induced_orbit_check(Pyramid::parse("2,1"), std::vector<int>{1, 2}).status == Status::NotApplicable);
    for (int after = 1; after <= 3; ++after)
      CHECK(induced_orbit_check(Pyramid::parse("1,1,1,1"), after).passed());
  }

  TEST_CASE("BCD pyramids") {
    BCDPyramid b = bcd_pyramid(ClassicalType::SO, 3, 7, 2);
    REQUIRE(b.split.has_value());
    CHECK(b.N == 21);
    CHECK(b.split->k1 == Scalar::k() + Scalar(13));
    CHECK(b.split->k2 == Scalar::k() + Scalar(12));
    CHECK(bcd_check(b).passed());
    CHECK(in_classical(ClassicalType::SO, b.f));
    CHECK_NOTHROW(bcd_pyramid(ClassicalType::SP, 3, 2));
    try {
      bcd_pyramid(ClassicalType::SP, 3, 3);
      FAIL("expected InvalidShape");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidShape);
    }
    CHECK_THROWS_AS(bcd_pyramid(ClassicalType::SO, 3, 4, 2), Error);
  }
}
