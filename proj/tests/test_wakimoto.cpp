#include <doctest.h>

#include "walg/fock.hpp"
#include "walg/glstruct.hpp"
#include "walg/wakimoto.hpp"

using namespace walg;

TEST_SUITE("wakimoto") {
  TEST_CASE("rho is a Lie homomorphism on gl2 and gl3 charts") {
    CHECK(structural_checks(Pyramid::parse("1,1").grading(), "gl2").passed());
    CHECK(structural_checks(Pyramid::parse("2,1").grading(), "gl3_subregular").passed());
  }

  TEST_CASE("rho respects brackets on random combinations") {
    Wakimoto w(Pyramid::parse("1,1,1").grading());
    GlElem a = GlElem::unit(1, 2) + Scalar(2) * GlElem::unit(3, 1), b = GlElem::unit(2, 3) - GlElem::unit(2, 2);
    CHECK(w.left(bracket(a, b)) == commutator(w.left(a), w.left(b)));
  }

  TEST_CASE("affine lift of gl2 closes with solved constants") {
    AffineLift lift = affine_lift(Pyramid::parse("1,1").grading(), false);
    CHECK(lift.audit.passed());
    REQUIRE(lift.c.count(1));
    CHECK(lift.c.at(1) == Scalar(-2));
  }

  TEST_CASE("screening kinds follow the grading") {
    Grading g = Pyramid::parse("2,1").grading();
    Wakimoto w(g);
    AffineLift lift = affine_lift(g, true);
    CHECK(screening_spec(w, lift.ff, 1).kind == ScreeningKind::Pi0);
    CHECK(screening_spec(w, lift.ff, 2).kind == ScreeningKind::Pi1);
  }
}

TEST_SUITE("fock") {
  TEST_CASE("principal screening kernels") {
    CHECK(principal_kernel_check(2).passed());
    CHECK(principal_kernel_check(3).passed());
  }

  TEST_CASE("subregular and rectangular screening kernels") {
    CHECK(subregular_kernel_check(3).passed());
    CHECK(rectangular_kernel_check(2, 2).passed());
  }

  TEST_CASE("intertwiners are equivariant") {
    CHECK(intertwiner_checks(Pyramid::parse("2,1").grading(), "gl3_subregular").passed());
  }
}
