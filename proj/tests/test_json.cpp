#include <doctest.h>

#include "lie/catalog.hpp"
#include "lie/functors.hpp"
#include "lie/json_io.hpp"

using namespace lie;

TEST_CASE("algebra JSON round trip preserves structure and realization") {
  LieAlgebra su2 = catalog_get("su2").algebra;
  Json j = algebra_to_json(su2);
  LieAlgebra back = algebra_from_json(j);
  CHECK(same_structure(back, su2));
  CHECK(back.name == "su2");
  CHECK(back.basis_labels == su2.basis_labels);
  REQUIRE(back.realization.has_value());
  for (int k = 0; k < 3; ++k) CHECK(back.matrix(k) == su2.matrix(k));
  CHECK(algebra_to_json(back) == j);

  // sparse form lists only nonzero constants
  CHECK(j["structure_constants"].size() == 6);
}

TEST_CASE("morphism JSON round trip") {
  AlgebraMorphism xi = xi_basis_change();
  AlgebraMorphism back = morphism_from_json(morphism_to_json(xi));
  CHECK(back.T == xi.T);
  CHECK(back.linearity == Linearity::Linear);
  CHECK(same_structure(back.source, xi.source));
  CHECK(same_structure(back.target, xi.target));
  CHECK(check_morphism(back).pass);

  AlgebraMorphism anti = conj_iso_real_constants(catalog_get("sl2C").algebra);
  CHECK(morphism_from_json(morphism_to_json(anti)).linearity ==
        Linearity::CoordinateAntilinear);

  // theta serializes with its source and target algebras embedded
  AlgebraMorphism th = theta(catalog_get("sl2C").algebra);
  AlgebraMorphism th_back = morphism_from_json(morphism_to_json(th));
  CHECK(th_back.T == th.T);
  MorphismReport rep = check_morphism(th_back);
  CHECK(rep.pass);
  CHECK(rep.invertible);
}

TEST_CASE("schema violations name the offending key") {
  Json j = algebra_to_json(catalog_get("su2").algebra);
  j.erase("dim");
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("algebra.dim"), Error);

  Json bad = algebra_to_json(catalog_get("su2").algebra);
  bad["structure_constants"][0][0] = 7;
  CHECK_THROWS_WITH_AS(algebra_from_json(bad),
                       doctest::Contains("structure_constants[0]"), Error);
}

TEST_CASE("representation JSON carries label, backend and exact entries") {
  ExactRep r = lorentz_irrep({HalfInt(1), HalfInt(0)});
  Json j = rep_to_json(r);
  CHECK(j["label"] == Json::array({1, 0}));
  CHECK(j["dim"] == 2);
  CHECK(j["backend"] == "exact");
  CHECK(j["generators"].size() == 6);
  CHECK(j["generators"][0][0][1] == "-1/2");  // rho(K1) upper right

  Json n = rep_to_json(to_numeric(r));
  CHECK(n["backend"] == "float");
  CHECK(n["generators"][0][0][1] == "-0.5");
}

TEST_CASE("field JSON round trip with mask") {
  SampledField f;
  f.rep = {FieldRep::Kind::Irrep, {HalfInt(1), HalfInt(0)}};
  f.grid.origin = {0, 0, 0, 0};
  f.grid.spacing = {0.5, 1, 1, 1};
  f.grid.extents = {2, 2, 1, 1};
  f.values = {cplx(1, 2), cplx(0, -1), cplx(3, 0), cplx(0.5, 0.25),
              cplx(0, 0), cplx(-1, -1), cplx(2, 2), cplx(1, 0)};
  f.mask = {1, 1, 0, 1};
  SampledField back = field_from_json(field_to_json(f));
  CHECK(back.values == f.values);
  CHECK(back.mask == f.mask);
  CHECK(back.grid.extents == f.grid.extents);
  CHECK(back.rep.kind == FieldRep::Kind::Irrep);
  CHECK(back.rep.label == f.rep.label);

  SampledField dirac;
  dirac.rep = {FieldRep::Kind::Dirac, {}};
  dirac.grid.extents = {1, 1, 1, 1};
  dirac.values.assign(4, cplx{});
  CHECK(field_from_json(field_to_json(dirac)).rep.kind == FieldRep::Kind::Dirac);
}

TEST_CASE("field schema errors carry the key path") {
  SampledField f;
  f.rep = {FieldRep::Kind::Irrep, {HalfInt(0), HalfInt(0)}};
  f.grid.extents = {2, 1, 1, 1};
  f.values = {cplx(1, 0), cplx(2, 0)};
  Json good = field_to_json(f);

  Json j = good;
  j["grid"].erase("spacing");
  CHECK_THROWS_WITH_AS(field_from_json(j), doctest::Contains("grid.spacing"), Error);

  j = good;
  j["values"].push_back("0");
  CHECK_THROWS_WITH_AS(field_from_json(j), doctest::Contains("values"), Error);

  j = good;
  j["rep_label"] = "octonion";
  CHECK_THROWS_WITH_AS(field_from_json(j), doctest::Contains("rep_label"), Error);

  j = good;
  j["grid"]["spacing"][1] = 0.0;
  CHECK_THROWS_AS(field_from_json(j), Error);
}

TEST_CASE("every catalog family round trips through the schema") {
  for (const char* key : {"so13", "sl2C_R", "su(3)", "so(4)", "gl(2,C)", "abelian(2,C)"}) {
    LieAlgebra g = catalog_get(key).algebra;
    LieAlgebra back = algebra_from_json(algebra_to_json(g));
    CHECK(same_structure(back, g));
    for (const auto& rep : check_algebra(back)) CHECK(rep.pass);
  }
}

TEST_CASE("serialization is deterministic") {
  Json a = algebra_to_json(catalog_get("so13").algebra);
  Json b = algebra_to_json(catalog_get("so13").algebra);
  CHECK(a.dump() == b.dump());
  Json r1 = rep_to_json(lorentz_irrep_symmetric({HalfInt(1), HalfInt(1)}));
  Json r2 = rep_to_json(lorentz_irrep_symmetric({HalfInt(1), HalfInt(1)}));
  CHECK(r1.dump() == r2.dump());
}
