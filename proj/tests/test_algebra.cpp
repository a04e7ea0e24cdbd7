#include <doctest.h>

#include <random>

#include "lie/catalog.hpp"

using namespace lie;

namespace {

ExactVec random_vec(std::mt19937& rng, int n) {
  ExactVec v = zero_vec(n);
  for (int k = 0; k < n; ++k)
    v[size_t(k)] = ExactScalar{Rat(int(rng() % 9) - 4, 1 + int(rng() % 3)),
                               Rat(int(rng() % 5) - 2, 1 + int(rng() % 2))};
  return v;
}

}  // namespace

TEST_CASE("su2 bracket reproduces the cyclic table") {
  LieAlgebra su2 = catalog_get("su2").algebra;
  CHECK(bracket(su2, basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));
  CHECK(bracket(su2, basis_vec(3, 1), basis_vec(3, 2)) == basis_vec(3, 0));
  CHECK(bracket(su2, basis_vec(3, 2), basis_vec(3, 0)) == basis_vec(3, 1));
}

TEST_CASE("sl2C bracket: [H, X] = 2X and [X, Y] = H") {
  LieAlgebra g = catalog_get("sl2C").algebra;
  ExactVec two_x = zero_vec(3);
  two_x[1] = ExactScalar{2};
  CHECK(bracket(g, basis_vec(3, 0), basis_vec(3, 1)) == two_x);
  CHECK(bracket(g, basis_vec(3, 1), basis_vec(3, 2)) == basis_vec(3, 0));
}

TEST_CASE("bracket of anything with itself vanishes") {
  std::mt19937 rng(3);
  for (const char* key : {"su2", "so13", "sl2C", "gl(3,C)"}) {
    LieAlgebra g = catalog_get(key).algebra;
    ExactVec x = random_vec(rng, g.dim);
    for (const auto& c : bracket(g, x, x)) CHECK(c.is_zero());
  }
}

TEST_CASE("bracket is bilinear over random exact scalars") {
  std::mt19937 rng(5);
  LieAlgebra g = catalog_get("so13").algebra;
  for (int t = 0; t < 25; ++t) {
    ExactVec x = random_vec(rng, 6), y = random_vec(rng, 6), z = random_vec(rng, 6);
    ExactScalar a{Rat(int(rng() % 9) - 4, 1 + int(rng() % 3))};
    ExactScalar b{Rat(int(rng() % 9) - 4, 1 + int(rng() % 3)), Rat(1, 2)};
    ExactVec combo = zero_vec(6);
    for (int k = 0; k < 6; ++k) combo[size_t(k)] = a * x[size_t(k)] + b * y[size_t(k)];
    ExactVec lhs = bracket(g, combo, z);
    ExactVec bx = bracket(g, x, z), by = bracket(g, y, z);
    for (int k = 0; k < 6; ++k)
      CHECK(lhs[size_t(k)] == a * bx[size_t(k)] + b * by[size_t(k)]);
  }
}

TEST_CASE("bracket rejects dimension mismatches by name") {
  LieAlgebra g = catalog_get("su2").algebra;
  CHECK_THROWS_WITH_AS(bracket(g, zero_vec(3), zero_vec(6)),
                       doctest::Contains("su2"), Error);
}

TEST_CASE("antisymmetry check finds a constructed violation") {
  CHECK(check_antisymmetry(catalog_get("so13").algebra).pass);
  CHECK(check_antisymmetry(catalog_get("su2").algebra).pass);

  LieAlgebra bad;
  bad.name = "bad";
  bad.field = FieldTag::Real;
  bad.dim = 4;
  bad.basis_labels = {"a", "b", "c", "d"};
  bad.c = StructureConstants(4);
  bad.c.at(1, 2, 3) = ExactScalar{1};
  bad.c.at(2, 1, 3) = ExactScalar{1};
  CheckReport rep = check_antisymmetry(bad);
  CHECK(!rep.pass);
  CHECK(rep.details.find("(1,2,3)") != std::string::npos);
}

TEST_CASE("jacobi check is a direct evaluation of the cyclic sum") {
  CHECK(check_jacobi(catalog_get("sl2C").algebra).pass);
  CHECK(check_jacobi(catalog_get("abelian(3,R)").algebra).pass);

  // one perturbed slot breaks the identity
  LieAlgebra g = catalog_get("su2").algebra;
  g.realization.reset();
  g.c.at(0, 1, 0) += ExactScalar{1};
  g.c.at(1, 0, 0) -= ExactScalar{1};  // keep antisymmetry so only jacobi trips
  CHECK(check_antisymmetry(g).pass);
  CHECK(!check_jacobi(g).pass);
}

TEST_CASE("realization check verifies the commutator identity") {
  CHECK(check_realization(catalog_get("so3").algebra).pass);
  CHECK(check_realization(catalog_get("so13").algebra).pass);

  LieAlgebra halved = catalog_get("su2").algebra;
  std::vector<ExactMat> ms;
  for (const auto& m : *halved.realization) ms.push_back(m.scaled(ExactScalar::of(1, 2)));
  halved.realization = ms;
  CHECK(!check_realization(halved).pass);

  LieAlgebra bare = catalog_get("abelian(2,R)").algebra;
  CHECK_THROWS_AS(check_realization(bare), Error);
}

TEST_CASE("direct product has block constants and no cross terms") {
  LieAlgebra su2 = catalog_get("su2").algebra;
  LieAlgebra p = direct_product(su2, su2);
  CHECK(p.dim == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      for (int k = 0; k < 6; ++k) CHECK(p.c.at(i, j, k).is_zero());
  CHECK(p.c.at(0, 1, 2) == ExactScalar{1});
  CHECK(p.c.at(3, 4, 5) == ExactScalar{1});
  CHECK(check_jacobi(p).pass);
  CHECK(check_realization(p).pass);  // block-diagonal matrices carried along

  LieAlgebra central = direct_product(su2, catalog_get("abelian(1,R)").algebra);
  CHECK(central.dim == 4);
  for (int k = 0; k < 4; ++k) CHECK(central.c.at(0, 3, k).is_zero());

  CHECK_THROWS_AS(direct_product(su2, catalog_get("sl2C").algebra), Error);
}

TEST_CASE("direct product dimensions add over catalog pairs") {
  for (auto [a, b] : {std::pair{"su2", "so13"}, {"sl2R", "so4"}, {"so3", "so(4)"}}) {
    LieAlgebra ga = catalog_get(a).algebra, gb = catalog_get(b).algebra;
    CHECK(direct_product(ga, gb).dim == ga.dim + gb.dim);
  }
}

TEST_CASE("morphism check: identity passes, a collapsing map fails at (X, Y)") {
  LieAlgebra so13 = catalog_get("so13").algebra;
  MorphismReport ok = check_morphism(identity_morphism(so13));
  CHECK(ok.pass);
  CHECK(ok.invertible);

  // H -> X, X -> 0, Y -> 0 on sl2C: both sides vanish on (H, X) and (H, Y),
  // but [X, Y] = H maps to X while [phi X, phi Y] = 0
  LieAlgebra sl2c = catalog_get("sl2C").algebra;
  AlgebraMorphism bad{sl2c, sl2c, ExactMat(3, 3), Linearity::Linear};
  bad.T(1, 0) = ExactScalar{1};
  MorphismReport rep = check_morphism(bad);
  CHECK(!rep.pass);
  CHECK(rep.details.find("(X, Y)") != std::string::npos);
}

TEST_CASE("composition of passing morphisms passes") {
  AlgebraMorphism iso = su2_so3_iso();
  AlgebraMorphism round = compose(invert(iso), iso);
  CHECK(check_morphism(round).pass);
  CHECK(round.T == ExactMat::identity(3));

  AlgebraMorphism chained = compose(eta_pm_basis(), so4_complex_match());
  CHECK(check_morphism(chained).pass);
}

TEST_CASE("algebra_from_realization recovers the su2 constants") {
  LieAlgebra su2 = catalog_get("su2").algebra;
  LieAlgebra derived = algebra_from_realization("derived", FieldTag::Real,
                                                su2.basis_labels, *su2.realization);
  CHECK(same_structure(derived, su2));
}
