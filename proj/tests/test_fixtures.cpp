#include <doctest.h>

#include "bvalg/fixtures.hpp"
#include "bvalg/hopf.hpp"
#include "helpers.hpp"

using namespace bvalg;
using bvalg::testing::el;
using bvalg::testing::Q;

TEST_SUITE("topology-fixtures") {

TEST_CASE("rational homotopy of spheres") {
  LiePresentation odd = sphere_loop_lie(3);
  REQUIRE(odd.size() == 1);
  CHECK(odd.degree(0) == 2);
  CHECK(odd.bracket_table().empty());

  for (int m : {2, 4}) {
    LiePresentation even = sphere_loop_lie(m);
    REQUIRE(even.size() == 2);
    CHECK(even.degree(0) == m - 1);
    CHECK(even.degree(1) == 2 * m - 2);
    CHECK(even.bracket(0, 0) == LieVector{{1, Scalar::one(Q())}});
    CHECK(even.bracket(0, 1).empty());
  }
  for (int m = 2; m <= 9; ++m)
    CHECK(check_lie_axioms(sphere_loop_lie(m)).passed());
  CHECK_THROWS_AS(sphere_loop_lie(1), AlgebraError);
}

TEST_CASE("loop space models") {
  BVStructure s24 = loopspace_model(2, 4, 12);
  const FreeAlgebra& alg = s24.algebra();
  CHECK(alg.generator(0).degree == 2);
  CHECK(alg.generator(1).degree == 5);
  CHECK(s24.has_bv());
  CHECK(free_bv(el(alg, "a"), s24).is_zero());
  CHECK(free_bv(el(alg, "b"), s24).is_zero());
  CHECK(free_bv(el(alg, "a^2"), s24) == el(alg, "b"));

  BVStructure s34 = loopspace_model(3, 4, 12);
  CHECK_FALSE(s34.has_bv());
  CHECK(s34.algebra().generator(0).degree == 1);
  CHECK(s34.algebra().generator(1).degree == 4);

  BVStructure s23 = loopspace_model(2, 3, 12);
  REQUIRE(s23.algebra().generator_count() == 1);
  CHECK(s23.algebra().generator(0).degree == 1);
  for (const auto& m : s23.algebra().basis_up_to(12))
    CHECK(free_bv(Element::term(m, s23.algebra().scalar(1)), s23).is_zero());

  CHECK_THROWS_AS(loopspace_model(2, 2, 10), AlgebraError);
  CHECK_THROWS_AS(loopspace_model(1, 4, 10), AlgebraError);
}

TEST_CASE("spherical vanishing for rational models") {
  for (int n : {2, 4})
    for (int m = n + 1; m <= n + 3; ++m) {
      BVStructure s = loopspace_model(n, m, 12);
      Report r = verify_bv_axioms(s, 12);
      CHECK(r.passed());
      for (std::size_t g = 0; g < s.algebra().generator_count(); ++g)
        CHECK(free_bv(s.algebra().letter(g), s).is_zero());
    }
}

TEST_CASE("free operators are coderivations") {
  BVStructure s = loopspace_model(2, 4, 10);
  CHECK(is_coderivation(bv_map(s)).passed());
}

TEST_CASE("descriptors over Q") {
  StructureDescriptor d3 = fd_descriptor(3, Q());
  CHECK_FALSE(d3.bv);
  REQUIRE(d3.generators.size() == 1);
  CHECK(d3.generators[0].id == "a3");
  CHECK(d3.generators[0].action_trivial);

  StructureDescriptor d2 = fd_descriptor(2, Q());
  CHECK(d2.bv);
  CHECK(d2.bv_degree == 1);

  StructureDescriptor d4 = fd_descriptor(4, Q());
  CHECK(d4.bv);
  REQUIRE(d4.generators.size() == 2);
  CHECK(d4.generators[1].defines_bv);
  CHECK(d4.generators[1].id == "a3'");
  for (int n = 2; n <= 8; ++n)
    CHECK(fd_descriptor(n, Q()).bv == (n % 2 == 0));
}

TEST_CASE("descriptor over F2") {
  StructureDescriptor d = fd_descriptor(2, FieldSpec::prime(2));
  CHECK(d.bv);
  CHECK_FALSE(d.spherical_vanishing);
  CHECK_THROWS_AS(fd_descriptor(3, FieldSpec::prime(2)), AlgebraError);
}

TEST_CASE("spherical classes") {
  FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
  FreeAlgebra alg(f2, {{"u1", 1}}, 4);
  SphericalTag tag{"id_S3", 1, SphericalTag::Eta::Tabulated, el(alg, "u1^2")};
  CHECK(spherical_bv(tag, f3)->is_zero());
  CHECK(*spherical_bv(tag, f2) == el(alg, "u1^2"));
  SphericalTag null{"g", 2, SphericalTag::Eta::Zero, std::nullopt};
  CHECK(spherical_bv(null, f2)->is_zero());
  SphericalTag unknown{"h", 3, SphericalTag::Eta::Unknown, std::nullopt};
  CHECK_FALSE(spherical_bv(unknown, f2).defined());
  CHECK(spherical_bv(unknown, FieldSpec::prime(5))->is_zero());
}

TEST_CASE("double loops on S3 over F2") {
  BVStructure s2 = omega2_s3_f2(2);
  CHECK(s2.algebra().basis_up_to(2).size() == 3);
  StructureEvaluator ev2(s2);
  Partial v = ev2.bv(s2.algebra().letter_monomial(0));
  REQUIRE(v.defined());
  CHECK(*v == el(s2.algebra(), "u1^2"));

  BVStructure s1 = omega2_s3_f2(1);
  CHECK(s1.algebra().basis_up_to(1).size() == 2);
  StructureEvaluator ev1(s1);
  Partial w = ev1.bv(s1.algebra().letter_monomial(0));
  REQUIRE(w.defined());
  CHECK(w->out_of_window());

  BVStructure s7 = omega2_s3_f2(7);
  REQUIRE(s7.algebra().generator_count() == 3);
  CHECK(s7.algebra().generator(2).id == "u3");
  CHECK(s7.algebra().generator(2).degree == 7);
}

TEST_CASE("coverage counts exactly one known value in low degrees") {
  for (int D : {2, 3}) {
    Report r = verify_bv_axioms(omega2_s3_f2(D), D);
    const Verdict* v = r.find("bv-defined");
    REQUIRE(v);
    CHECK(v->checked == 1);
    CHECK(r.passed());
    CHECK(r.coverage() < 1);
  }
}

TEST_CASE("diagonal operator on u1") {
  BVStructure s = omega2_s3_f2(4);
  GradedMap diag = omega2_s3_f2_bv_diag(s);
  Monomial u1 = s.algebra().letter_monomial(0);
  REQUIRE(diag.value(u1).has_value());
  CHECK(diag.value(u1)->is_zero());
  CHECK_FALSE(diag.is_defined(s.algebra().letter_monomial(1)));
}

TEST_CASE("fixture names") {
  CHECK(resolve_fixture("sphere-lie:4", 10).lie.has_value());
  CHECK(resolve_fixture("loopspace:2:4", 10).structure.has_value());
  CHECK(resolve_fixture("omega2-s3-f2", 10).structure.has_value());
  CHECK(resolve_fixture("fd:4:Q", 10).descriptor.has_value());
  CHECK_THROWS_AS(resolve_fixture("loopspace:2", 10), AlgebraError);
  CHECK_THROWS_AS(resolve_fixture("torus", 10), AlgebraError);
}

}
