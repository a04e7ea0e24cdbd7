#include <doctest.h>

#include <random>

#include "lie/matrix.hpp"

using namespace lie;

namespace {

ExactMat random_mat(std::mt19937& rng, int n) {
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = ExactScalar{Rat(int(rng() % 11) - 5, 1 + int(rng() % 3)),
                            Rat(int(rng() % 7) - 3, 1 + int(rng() % 2))};
  return m;
}

}  // namespace

TEST_CASE("exact inverse and determinant") {
  std::mt19937 rng(11);
  int inverted = 0;
  for (int t = 0; t < 40; ++t) {
    ExactMat m = random_mat(rng, 4);
    auto inv = m.inverse();
    if (!inv) {
      CHECK(m.det().is_zero());
      continue;
    }
    ++inverted;
    CHECK((m * *inv) == ExactMat::identity(4));
    CHECK(!m.det().is_zero());
  }
  CHECK(inverted > 30);  // random exact matrices are almost always invertible
}

TEST_CASE("rank-one projector reduces to rank one") {
  // regression: eliminating with an aliased factor used to leave this at
  // full rank
  ExactMat p(2, 2);
  p(0, 0) = ExactScalar::of(1, 2);
  p(0, 1) = ExactScalar::imag(1, 2);
  p(1, 0) = ExactScalar::imag(-1, 2);
  p(1, 1) = ExactScalar::of(1, 2);
  ExactMat t = p.transpose();
  CHECK(rref(t) == 1);
}

TEST_CASE("row space comparison") {
  ExactMat a(2, 3), b(2, 3), c(1, 3);
  a(0, 0) = ExactScalar{1};
  a(1, 1) = ExactScalar{1};
  b(0, 0) = ExactScalar{2};
  b(0, 1) = ExactScalar{3};
  b(1, 1) = ExactScalar{-1};
  c(0, 0) = ExactScalar{1};
  CHECK(same_row_space(a, b));
  CHECK(!same_row_space(a, c));
  CHECK(in_row_space(a, {ExactScalar{5}, ExactScalar{-2}, ExactScalar{}}));
  CHECK(!in_row_space(a, {ExactScalar{}, ExactScalar{}, ExactScalar{1}}));
}

TEST_CASE("kron dimensions and structure") {
  ExactMat a = ExactMat::identity(2), b(3, 3);
  b(0, 2) = ExactScalar{4};
  ExactMat k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k(0, 2) == ExactScalar{4});
  CHECK(k(3, 5) == ExactScalar{4});
  CHECK(k(0, 5).is_zero());
}

TEST_CASE("solve_exact finds the unique representation") {
  ExactMat a(3, 2);
  a(0, 0) = ExactScalar{1};
  a(1, 1) = ExactScalar{2};
  a(2, 0) = ExactScalar{1};
  a(2, 1) = ExactScalar{1};
  auto x = solve_exact(a, {ExactScalar{3}, ExactScalar{4}, ExactScalar{5}});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == ExactScalar{3});
  CHECK((*x)[1] == ExactScalar{2});
  CHECK(!solve_exact(a, {ExactScalar{3}, ExactScalar{4}, ExactScalar{6}}).has_value());
}

TEST_CASE("float inverse pivots by magnitude") {
  CMat m(2, 2);
  m(0, 0) = 1e-18;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 0.0;
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(((m * *inv) - CMat::identity(2)).max_abs() < 1e-12);
}
