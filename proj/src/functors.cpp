#include "lie/functors.hpp"

namespace lie {

namespace {

ExactVec add(const ExactVec& a, const ExactVec& b) {
  ExactVec r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

ExactVec sub(const ExactVec& a, const ExactVec& b) {
  ExactVec r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

}  // namespace

Complexification complexify(const LieAlgebra& g) {
  if (g.field != FieldTag::Complex) {
    LieAlgebra out = g;
    out.name = g.name + "_C";
    out.field = FieldTag::Complex;
    return {std::move(out)};
  }
  throw Error("complexify(" + g.name + "): input is already complex; use scalar_restrict to "
              "view it as a real algebra first");
}

ComplexifiedElement pair_bracket(const LieAlgebra& g, const ComplexifiedElement& a,
                                 const ComplexifiedElement& b) {
  return {sub(bracket(g, a.x, b.x), bracket(g, a.y, b.y)),
          add(bracket(g, a.x, b.y), bracket(g, a.y, b.x))};
}

LieAlgebra scalar_restrict(const LieAlgebra& g) {
  if (g.field != FieldTag::Complex)
    throw Error("scalar_restrict(" + g.name + "): input is already real");
  const int n = g.dim;
  LieAlgebra out;
  out.name = g.name + "^R";
  out.field = FieldTag::Real;
  out.dim = 2 * n;
  out.basis_labels = g.basis_labels;
  for (int k = 0; k < n; ++k) out.basis_labels.push_back("i*" + g.basis_labels[size_t(k)]);
  out.c = StructureConstants(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ExactScalar& cc = g.c.at(i, j, k);
        if (cc.is_zero()) continue;
        ExactScalar a{cc.re}, b{cc.im};
        // [X_i, X_j]   = a X_k + b (iX_k)
        out.c.at(i, j, k) = a;
        out.c.at(i, j, n + k) = b;
        // [X_i, iX_j]  = -b X_k + a (iX_k), and the same for [iX_i, X_j]
        out.c.at(i, n + j, k) = -b;
        out.c.at(i, n + j, n + k) = a;
        out.c.at(n + i, j, k) = -b;
        out.c.at(n + i, j, n + k) = a;
        // [iX_i, iX_j] = -a X_k - b (iX_k)
        out.c.at(n + i, n + j, k) = -a;
        out.c.at(n + i, n + j, n + k) = -b;
      }
  if (g.realization) {
    std::vector<ExactMat> ms = *g.realization;
    for (int k = 0; k < n; ++k) ms.push_back(g.matrix(k).scaled(ExactScalar::i()));
    out.realization = std::move(ms);
  }
  return out;
}

LieAlgebra conjugate_algebra(const LieAlgebra& g) {
  if (g.field != FieldTag::Complex)
    throw Error("conjugate_algebra(" + g.name + "): only complex algebras have a conjugate");
  LieAlgebra out = g;
  out.name = "conj(" + g.name + ")";
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) out.c.at(i, j, k) = g.c.at(i, j, k).conj();
  if (g.realization) {
    std::vector<ExactMat> ms;
    for (int k = 0; k < g.dim; ++k) ms.push_back(g.matrix(k).conjugate());
    out.realization = std::move(ms);
  }
  return out;
}

AlgebraMorphism theta(const LieAlgebra& g) {
  if (g.field != FieldTag::Complex)
    throw Error("theta(" + g.name + "): defined for complex algebras");
  const int n = g.dim;
  AlgebraMorphism m;
  m.source = complexify(scalar_restrict(g)).algebra;
  m.target = direct_product(g, conjugate_algebra(g));
  m.linearity = Linearity::Linear;
  m.T = ExactMat(2 * n, 2 * n);
  const ExactScalar one{1}, i = ExactScalar::i();
  for (int k = 0; k < n; ++k) {
    // X_k      -> (X_k, X_k)
    m.T(k, k) = one;
    m.T(n + k, k) = one;
    // iX_k     -> (i X_k, -i X_k)   [the second factor carries the
    //                                conjugated scalar action]
    m.T(k, n + k) = i;
    m.T(n + k, n + k) = -i;
  }
  return m;
}

AlgebraMorphism conj_iso_real_constants(const LieAlgebra& g) {
  if (g.field != FieldTag::Complex)
    throw Error("conj_iso_real_constants(" + g.name + "): complex algebra expected");
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (!g.c.at(i, j, k).is_real())
          throw Error("conj_iso_real_constants(" + g.name + "): non-real constant c(" +
                      std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                      ") = " + g.c.at(i, j, k).str());
  return {g, conjugate_algebra(g), ExactMat::identity(g.dim), Linearity::CoordinateAntilinear};
}

AlgebraMorphism corollary_iso(const LieAlgebra& g) {
  conj_iso_real_constants(g);  // enforces the real-constants precondition
  AlgebraMorphism m = theta(g);
  // with real constants conj(g) has entrywise equal constants, so the second
  // factor is g itself and theta's matrix already lands in g x g
  m.target = direct_product(g, g);
  return m;
}

ComplexStructureMap canonical_complex_structure(int real_dim) {
  if (real_dim % 2 != 0)
    throw Error("canonical_complex_structure: odd dimension " + std::to_string(real_dim));
  const int n = real_dim / 2;
  ExactMat j(real_dim, real_dim);
  for (int k = 0; k < n; ++k) {
    j(n + k, k) = ExactScalar{1};
    j(k, n + k) = ExactScalar{-1};
  }
  return {std::move(j)};
}

namespace {

// rows spanning the image of p, in canonical (RREF) form
ExactMat image_rows(const ExactMat& p) {
  ExactMat rows = p.transpose();
  int rank = rref(rows);
  ExactMat out(rank, p.rows());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < p.rows(); ++j) out(i, j) = rows(i, j);
  return out;
}

bool closed_under_bracket(const LieAlgebra& g, const ExactMat& rows) {
  for (int a = 0; a < rows.rows(); ++a)
    for (int b = a + 1; b < rows.rows(); ++b) {
      ExactVec u = zero_vec(g.dim), v = zero_vec(g.dim);
      for (int k = 0; k < g.dim; ++k) {
        u[size_t(k)] = rows(a, k);
        v[size_t(k)] = rows(b, k);
      }
      if (!in_row_space(rows, bracket(g, u, v))) return false;
    }
  return true;
}

bool brackets_vanish(const LieAlgebra& g, const ExactMat& p, const ExactMat& q) {
  for (int a = 0; a < p.rows(); ++a)
    for (int b = 0; b < q.rows(); ++b) {
      ExactVec u = zero_vec(g.dim), v = zero_vec(g.dim);
      for (int k = 0; k < g.dim; ++k) {
        u[size_t(k)] = p(a, k);
        v[size_t(k)] = q(b, k);
      }
      for (const auto& s : bracket(g, u, v))
        if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace

SplitResult split_by_complex_structure(const LieAlgebra& gR_C, const ComplexStructureMap& j) {
  const int d = gR_C.dim;
  if (j.J.rows() != d || j.J.cols() != d)
    throw Error("split_by_complex_structure: J is " + std::to_string(j.J.rows()) + "x" +
                std::to_string(j.J.cols()) + " on an algebra of dim " + std::to_string(d));
  ExactMat jsq = j.J * j.J + ExactMat::identity(d);
  if (!jsq.is_zero())
    throw Error("split_by_complex_structure: J^2 != -id (max residual " +
                std::to_string(jsq.max_abs()) + ")");

  const ExactScalar half{Rat(1, 2)};
  ExactMat iJ = j.J.scaled(ExactScalar::i());
  ExactMat p_plus = (ExactMat::identity(d) - iJ).scaled(half);
  ExactMat p_minus = (ExactMat::identity(d) + iJ).scaled(half);

  SplitResult out;
  out.plus_basis = image_rows(p_plus);
  out.minus_basis = image_rows(p_minus);
  out.dims_ok = out.plus_basis.rows() == d / 2 && out.minus_basis.rows() == d / 2;
  out.plus_closed = closed_under_bracket(gR_C, out.plus_basis);
  out.minus_closed = closed_under_bracket(gR_C, out.minus_basis);
  out.cross_commutes = brackets_vanish(gR_C, out.plus_basis, out.minus_basis);
  return out;
}

AlgebraMorphism complexify_morphism(const AlgebraMorphism& phi) {
  if (phi.source.field != FieldTag::Real)
    throw Error("complexify_morphism: source " + phi.source.name + " must be real");
  if (phi.target.field != FieldTag::Complex)
    throw Error("complexify_morphism: target " + phi.target.name + " must be complex");
  auto rep = check_morphism(phi);
  if (!rep.pass)
    throw Error("complexify_morphism: input is not a morphism (" + rep.details + ")");
  AlgebraMorphism out = phi;
  out.source = complexify(phi.source).algebra;
  return out;
}

AlgebraMorphism complexify_real_morphism(const AlgebraMorphism& m) {
  if (m.source.field != FieldTag::Real || m.target.field != FieldTag::Real)
    throw Error("complexify_real_morphism: both sides of " + m.source.name + " -> " +
                m.target.name + " must be real");
  AlgebraMorphism out = m;
  out.source = complexify(m.source).algebra;
  out.target = complexify(m.target).algebra;
  return out;
}

AlgebraMorphism restrict_morphism(const AlgebraMorphism& psi) {
  if (psi.source.field != FieldTag::Complex)
    throw Error("restrict_morphism: source " + psi.source.name + " must be complex");
  auto rep = check_morphism(psi);
  if (!rep.pass)
    throw Error("restrict_morphism: input is not a morphism (" + rep.details + ")");
  for (int i = 0; i < psi.source.dim; ++i)
    for (int j = 0; j < psi.source.dim; ++j)
      for (int k = 0; k < psi.source.dim; ++k)
        if (!psi.source.c.at(i, j, k).is_real())
          throw Error("restrict_morphism: source " + psi.source.name +
                      " has non-real constants; it is not a complexified real algebra");
  AlgebraMorphism out = psi;
  out.source.field = FieldTag::Real;
  if (out.source.name.size() > 2 && out.source.name.ends_with("_C"))
    out.source.name.resize(out.source.name.size() - 2);
  else
    out.source.name += "|R";
  return out;
}

}  // namespace lie
