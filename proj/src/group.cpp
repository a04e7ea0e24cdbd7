#include "lie/group.hpp"

#include <cmath>

#include "lie/catalog.hpp"

namespace lie {

CMat minkowski_metric() {
  CMat eta = CMat::identity(4);
  eta(0, 0) = -1.0;
  return eta;
}

CMat expm(const CMat& m, double tol) {
  if (m.rows() != m.cols())
    throw Error("expm: non-square input " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()));
  const int n = m.rows();
  double norm = m.norm_one();
  int squarings = 0;
  while (norm > 0.5 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  double scale = std::ldexp(1.0, -squarings);
  CMat a = m.scaled(cplx(scale, 0.0));

  CMat result = CMat::identity(n);
  CMat term = CMat::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * a).scaled(cplx(1.0 / k, 0.0));
    result += term;
    if (term.norm_inf() <= tol * 0.01) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

namespace {

void require_so13(const NumericRep& rep) {
  static const LieAlgebra so13 = catalog_get("so13").algebra;
  if (!same_structure(rep.algebra, so13))
    throw Error("lorentz_element: representation is over " + rep.algebra.name +
                ", not the so13 basis {K1..K3, eta1..eta3}");
}

}  // namespace

CMat lorentz_element(const LorentzParams& p, const NumericRep& rep, double tol) {
  require_so13(rep);
  CMat gen(rep.dim, rep.dim);
  for (int a = 0; a < 3; ++a) {
    gen += rep.rho[size_t(a)].scaled(cplx(p.gamma[size_t(a)], 0.0));
    gen += rep.rho[size_t(3 + a)].scaled(cplx(p.theta[size_t(a)], 0.0));
  }
  return expm(gen, tol);
}

std::array<CMat, 3> pauli_matrices() {
  CMat s1(2, 2), s2(2, 2), s3(2, 2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  s2(0, 1) = cplx(0, -1);
  s2(1, 0) = cplx(0, 1);
  s3(0, 0) = 1.0;
  s3(1, 1) = -1.0;
  return {s1, s2, s3};
}

CMat lambda_left(const LorentzParams& p, double tol) {
  auto sigma = pauli_matrices();
  CMat gen(2, 2);
  for (int a = 0; a < 3; ++a)
    gen += sigma[size_t(a)].scaled(cplx(-0.5 * p.gamma[size_t(a)], -0.5 * p.theta[size_t(a)]));
  return expm(gen, tol);
}

CMat lambda_right(const LorentzParams& p, double tol) {
  auto sigma = pauli_matrices();
  CMat gen(2, 2);
  for (int a = 0; a < 3; ++a)
    gen += sigma[size_t(a)].scaled(cplx(0.5 * p.gamma[size_t(a)], -0.5 * p.theta[size_t(a)]));
  return expm(gen, tol);
}

CMat lambda_dirac(const LorentzParams& p, double tol) {
  CMat left = lambda_left(p, tol);
  CMat right = lambda_right(p, tol);
  CMat d(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      d(i, j) = left(i, j);
      d(2 + i, 2 + j) = right(i, j);
    }
  return d;
}

}  // namespace lie
