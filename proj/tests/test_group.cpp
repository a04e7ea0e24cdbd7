#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lie/catalog.hpp"
#include "lie/group.hpp"

using namespace lie;

namespace {

// independent oracle: plain truncated Taylor series, no scaling
CMat taylor_expm(const CMat& m, int terms) {
  CMat acc = CMat::identity(m.rows());
  CMat pow = CMat::identity(m.rows());
  for (int k = 1; k <= terms; ++k) {
    pow = (pow * m).scaled(cplx(1.0 / k, 0));
    acc += pow;
  }
  return acc;
}

CMat random_cmat(std::mt19937& rng, int n, double scale) {
  CMat m(n, n);
  auto u = [&] { return (double(rng() >> 5) / 134217728.0 - 0.5) * 2.0 * scale; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(u(), u());
  return m;
}

NumericRep fundamental() {
  return to_numeric(fundamental_rep(catalog_get("so13").algebra));
}

}  // namespace

TEST_CASE("expm(0) is the identity exactly") {
  CMat z(5, 5);
  CHECK(expm(z) == CMat::identity(5));
  CHECK_THROWS_AS(expm(CMat(2, 3)), Error);
}

TEST_CASE("expm agrees with the Taylor oracle and inverts cleanly") {
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    CMat m = random_cmat(rng, 4, 0.4);
    CHECK((expm(m) - taylor_expm(m, 30)).max_abs() < 1e-13);
    CHECK((expm(m) * expm(m.scaled(cplx(-1, 0))) - CMat::identity(4)).max_abs() < 1e-12);
  }
}

TEST_CASE("boost with rapidity 0.7 gives the cosh/sinh block") {
  NumericRep fund = fundamental();
  LorentzParams p;
  p.gamma = {0.7, 0.0, 0.0};
  CMat d = lorentz_element(p, fund);

  // oracle 1: truncated Taylor series of the generator
  CMat gen = fund.rho[0].scaled(cplx(0.7, 0));
  CHECK((d - taylor_expm(gen, 30)).max_abs() < 1e-13);

  // oracle 2: closed form in the (0,1) block
  CHECK(d(0, 0).real() == doctest::Approx(std::cosh(0.7)).epsilon(1e-13));
  CHECK(d(0, 1).real() == doctest::Approx(std::sinh(0.7)).epsilon(1e-13));
  CHECK(std::abs(d(2, 2) - cplx(1, 0)) < 1e-14);
  CHECK(std::abs(d(0, 2)) < 1e-14);

  // metric preservation
  CMat eta = minkowski_metric();
  CHECK((d.transpose() * eta * d - eta).max_abs() < 1e-12);
}

TEST_CASE("rotation by pi/3 about axis 3 rotates the (1,2) plane") {
  NumericRep fund = fundamental();
  LorentzParams p;
  p.theta = {0.0, 0.0, std::numbers::pi / 3};
  CMat d = lorentz_element(p, fund);
  CHECK((d - taylor_expm(fund.rho[5].scaled(cplx(p.theta[2], 0)), 30)).max_abs() < 1e-13);
  CHECK(d(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d(1, 2).real() == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(d(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("zero parameters give the identity in every representation") {
  LorentzParams p;
  CHECK(lorentz_element(p, fundamental()) == CMat::identity(4));
  CHECK(lambda_left(p) == CMat::identity(2));
  CHECK(lambda_right(p) == CMat::identity(2));
  CHECK(lambda_dirac(p) == CMat::identity(4));
  CHECK(lorentz_element(p, lorentz_irrep_symmetric({HalfInt(2), HalfInt(1)})) ==
        CMat::identity(6));
}

TEST_CASE("lorentz_element rejects reps of other algebras") {
  NumericRep wrong = to_numeric(su2_irrep(HalfInt(1)));
  CHECK_THROWS_WITH_AS(lorentz_element({}, wrong), doctest::Contains("so13"), Error);
}

TEST_CASE("2 pi rotation is -I on the left spinor (double cover)") {
  NumericRep spinor = lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)});
  for (int axis = 0; axis < 3; ++axis) {
    LorentzParams p;
    p.theta[size_t(axis)] = 2 * std::numbers::pi;
    CHECK((lorentz_element(p, spinor) + CMat::identity(2)).max_abs() < 1e-10);
  }
}

TEST_CASE("weyl blocks agree with the generic exponential path") {
  std::mt19937 rng(41);
  NumericRep left = lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)});
  NumericRep right = lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)});
  auto u = [&] { return double(rng() >> 5) / 134217728.0 * 2.4 - 1.2; };
  for (int t = 0; t < 20; ++t) {
    LorentzParams p{{u(), u(), u()}, {u(), u(), u()}};
    CHECK((lambda_left(p) - lorentz_element(p, left)).max_abs() < 1e-10);
    CHECK((lambda_right(p) - lorentz_element(p, right)).max_abs() < 1e-10);
    CHECK((lambda_left(p) - *lambda_right(p).dagger().inverse()).max_abs() < 1e-10);
  }
}

TEST_CASE("a pure boost is far from unitary") {
  LorentzParams p;
  p.gamma = {1.0, 0.0, 0.0};
  CMat l = lambda_left(p);
  CHECK((l.dagger() * l - CMat::identity(2)).max_abs() > 0.1);
}

TEST_CASE("dirac block structure") {
  std::mt19937 rng(43);
  auto u = [&] { return double(rng() >> 5) / 134217728.0 * 2.0 - 1.0; };
  LorentzParams p{{u(), u(), u()}, {u(), u(), u()}};
  CMat d = lambda_dirac(p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(d(i, 2 + j) == cplx{});
      CHECK(d(2 + i, j) == cplx{});
    }
  NumericRep dirac = direct_sum(lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)}),
                                lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)}));
  CHECK((d - lorentz_element(p, dirac)).max_abs() < 1e-10);
}

TEST_CASE("collinear parameters compose additively") {
  std::mt19937 rng(47);
  auto u = [&] { return double(rng() >> 5) / 134217728.0 * 1.0 - 0.5; };
  for (const auto& rep :
       {fundamental(), lorentz_irrep_symmetric({HalfInt(1), HalfInt(1)}),
        lorentz_irrep_symmetric({HalfInt(2), HalfInt(0)}),
        direct_sum(lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)}),
                   lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)}))}) {
    LorentzParams p{{u(), u(), u()}, {u(), u(), u()}};
    double s = 0.75;
    LorentzParams ps, sum;
    for (int a = 0; a < 3; ++a) {
      ps.theta[size_t(a)] = s * p.theta[size_t(a)];
      ps.gamma[size_t(a)] = s * p.gamma[size_t(a)];
      sum.theta[size_t(a)] = (1 + s) * p.theta[size_t(a)];
      sum.gamma[size_t(a)] = (1 + s) * p.gamma[size_t(a)];
    }
    CMat lhs = lorentz_element(p, rep) * lorentz_element(ps, rep);
    CHECK((lhs - lorentz_element(sum, rep)).max_abs() < 1e-10);
  }
}

TEST_CASE("boosted elements of non-trivial reps are never unitary") {
  std::mt19937 rng(53);
  auto u = [&] { return double(rng() >> 5) / 134217728.0 * 2.0 - 1.0; };
  for (int t1 = 0; t1 <= 2; ++t1)
    for (int t2 = 0; t2 <= 2; ++t2) {
      if (t1 == 0 && t2 == 0) continue;
      NumericRep rep = lorentz_irrep_symmetric({HalfInt(t1), HalfInt(t2)});
      LorentzParams p{{u(), u(), u()}, {0.6, u() * 0.3, u() * 0.3}};
      CMat d = lorentz_element(p, rep);
      CHECK((d.dagger() * d - CMat::identity(rep.dim)).max_abs() > 1e-3);
    }
}
