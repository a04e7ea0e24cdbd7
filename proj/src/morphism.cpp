#include "lie/morphism.hpp"

namespace lie {

ExactVec AlgebraMorphism::apply(const ExactVec& v) const {
  if (int(v.size()) != source.dim)
    throw Error("morphism apply: vector dim " + std::to_string(v.size()) + " vs source " +
                source.name + " dim " + std::to_string(source.dim));
  ExactVec out = zero_vec(target.dim);
  for (int j = 0; j < source.dim; ++j) {
    ExactScalar vj = linearity == Linearity::CoordinateAntilinear ? v[size_t(j)].conj()
                                                                  : v[size_t(j)];
    if (vj.is_zero()) continue;
    for (int i = 0; i < target.dim; ++i) out[size_t(i)] += T(i, j) * vj;
  }
  return out;
}

AlgebraMorphism identity_morphism(const LieAlgebra& g) {
  return {g, g, ExactMat::identity(g.dim), Linearity::Linear};
}

AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  if (!same_structure(f.source, g.target))
    throw Error("compose: middle algebras differ (" + f.source.name + " vs " + g.target.name +
                ")");
  ExactMat right = f.linearity == Linearity::CoordinateAntilinear ? g.T.conjugate() : g.T;
  Linearity lin = (f.linearity == g.linearity) ? Linearity::Linear
                                               : Linearity::CoordinateAntilinear;
  return {g.source, f.target, f.T * right, lin};
}

AlgebraMorphism invert(const AlgebraMorphism& m) {
  auto inv = m.T.inverse();
  if (!inv)
    throw Error("invert: morphism " + m.source.name + " -> " + m.target.name +
                " is not invertible");
  ExactMat t = m.linearity == Linearity::CoordinateAntilinear ? inv->conjugate() : *inv;
  return {m.target, m.source, std::move(t), m.linearity};
}

AlgebraMorphism product_morphism(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  if (f.linearity != g.linearity)
    throw Error("product_morphism: mixed linearity between factors");
  AlgebraMorphism out;
  out.source = direct_product(f.source, g.source);
  out.target = direct_product(f.target, g.target);
  out.linearity = f.linearity;
  out.T = ExactMat(out.target.dim, out.source.dim);
  for (int i = 0; i < f.target.dim; ++i)
    for (int j = 0; j < f.source.dim; ++j) out.T(i, j) = f.T(i, j);
  for (int i = 0; i < g.target.dim; ++i)
    for (int j = 0; j < g.source.dim; ++j)
      out.T(f.target.dim + i, f.source.dim + j) = g.T(i, j);
  return out;
}

MorphismReport check_morphism(const AlgebraMorphism& m) {
  MorphismReport rep;
  rep.check = "morphism";
  rep.subject = m.source.name + " -> " + m.target.name;
  rep.context = std::string("bracket preservation, ") + linearity_name(m.linearity);
  rep.exact = true;
  rep.pass = true;
  if (m.T.rows() != m.target.dim || m.T.cols() != m.source.dim)
    throw Error("check_morphism: matrix shape " + std::to_string(m.T.rows()) + "x" +
                std::to_string(m.T.cols()) + " vs target dim " + std::to_string(m.target.dim) +
                ", source dim " + std::to_string(m.source.dim));

  for (int i = 0; i < m.source.dim; ++i)
    for (int j = i + 1; j < m.source.dim; ++j) {
      // phi([X_i, X_j]) in target coordinates
      ExactVec br = zero_vec(m.source.dim);
      for (int k = 0; k < m.source.dim; ++k) br[size_t(k)] = m.source.c.at(i, j, k);
      ExactVec lhs = m.apply(br);
      // [phi(X_i), phi(X_j)]; basis coordinates are real, so conjugation
      // in the antilinear case acts trivially here
      ExactVec rhs = bracket(m.target, m.apply(basis_vec(m.source.dim, i)),
                             m.apply(basis_vec(m.source.dim, j)));
      for (int k = 0; k < m.target.dim; ++k) {
        ExactScalar d = lhs[size_t(k)] - rhs[size_t(k)];
        rep.residual = std::max(rep.residual, d.abs_approx());
        if (!d.is_zero() && rep.pass) {
          rep.pass = false;
          rep.details = "bracket mismatch on basis pair (" + m.source.basis_labels[size_t(i)] +
                        ", " + m.source.basis_labels[size_t(j)] + ") at target coordinate " +
                        std::to_string(k);
        }
      }
    }
  rep.invertible = m.T.rows() == m.T.cols() && m.T.inverse().has_value();
  return rep;
}

}  // namespace lie
