#include "lie/algebra.hpp"

#include <algorithm>

namespace lie {

namespace {

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim == b.dim && a.field == b.field && a.c == b.c;
}

ExactVec zero_vec(int n) { return ExactVec(size_t(n)); }

ExactVec basis_vec(int n, int k) {
  ExactVec v = zero_vec(n);
  v[size_t(k)] = ExactScalar{1};
  return v;
}

ExactVec bracket(const LieAlgebra& g, const ExactVec& x, const ExactVec& y) {
  if (int(x.size()) != g.dim || int(y.size()) != g.dim)
    throw Error("bracket on " + g.name + ": operand dims " + std::to_string(x.size()) + " and " +
                std::to_string(y.size()) + " vs algebra dim " + std::to_string(g.dim));
  ExactVec z = zero_vec(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    if (x[size_t(i)].is_zero()) continue;
    for (int j = 0; j < g.dim; ++j) {
      if (y[size_t(j)].is_zero()) continue;
      ExactScalar f = x[size_t(i)] * y[size_t(j)];
      for (int k = 0; k < g.dim; ++k) {
        const ExactScalar& cc = g.c.at(i, j, k);
        if (!cc.is_zero()) z[size_t(k)] += f * cc;
      }
    }
  }
  return z;
}

CheckReport check_antisymmetry(const LieAlgebra& g) {
  CheckReport rep{"antisymmetry", g.name, "c(i,j,k) = -c(j,i,k)", true, true, 0.0, ""};
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        ExactScalar v = g.c.at(i, j, k) + g.c.at(j, i, k);
        rep.residual = std::max(rep.residual, v.abs_approx());
        if (!v.is_zero() && rep.pass) {
          rep.pass = false;
          rep.details = "violated at " + triple(i, j, k) + ": c(i,j,k)+c(j,i,k) = " + v.str();
        }
      }
  return rep;
}

CheckReport check_jacobi(const LieAlgebra& g) {
  CheckReport rep{"jacobi", g.name, "sum of cyclic c(i,j,m)c(m,k,l) vanishes", true, true, 0.0, ""};
  const int n = g.dim;
  // nonzero (m, c(i,j,m)) per pair: keeps the quadruple loop near n^4 even
  // though the identity nominally has five indices
  std::vector<std::vector<std::pair<int, ExactScalar>>> nz(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        if (!g.c.at(i, j, m).is_zero()) nz[size_t(i) * n + j].emplace_back(m, g.c.at(i, j, m));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ExactVec r = zero_vec(n);
        for (const auto& [m, a] : nz[size_t(i) * n + j])
          for (int l = 0; l < n; ++l) r[size_t(l)] += a * g.c.at(m, k, l);
        for (const auto& [m, a] : nz[size_t(j) * n + k])
          for (int l = 0; l < n; ++l) r[size_t(l)] += a * g.c.at(m, i, l);
        for (const auto& [m, a] : nz[size_t(k) * n + i])
          for (int l = 0; l < n; ++l) r[size_t(l)] += a * g.c.at(m, j, l);
        for (int l = 0; l < n; ++l) {
          rep.residual = std::max(rep.residual, r[size_t(l)].abs_approx());
          if (!r[size_t(l)].is_zero() && rep.pass) {
            rep.pass = false;
            rep.details = "violated at (i,j,k,l) = (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                          "): sum = " + r[size_t(l)].str();
          }
        }
      }
  return rep;
}

CheckReport check_field_tag(const LieAlgebra& g) {
  CheckReport rep{"field_tag", g.name, "Real-tagged constants have zero imaginary part", true,
                  true, 0.0, ""};
  if (g.field == FieldTag::Complex) return rep;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (!g.c.at(i, j, k).is_real()) {
          rep.pass = false;
          rep.residual = std::max(rep.residual, g.c.at(i, j, k).abs_approx());
          if (rep.details.empty())
            rep.details = "non-real constant at " + triple(i, j, k) + ": " + g.c.at(i, j, k).str();
        }
  return rep;
}

CheckReport check_realization(const LieAlgebra& g) {
  CheckReport rep{"realization", g.name, "[M_i, M_j] = sum_k c(i,j,k) M_k", true, true, 0.0, ""};
  if (!g.realization)
    throw Error("check_realization on " + g.name + ": no realization attached");
  const auto& ms = *g.realization;
  if (int(ms.size()) != g.dim)
    throw Error("check_realization on " + g.name + ": " + std::to_string(ms.size()) +
                " matrices for dim " + std::to_string(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      ExactMat lhs = comm(ms[size_t(i)], ms[size_t(j)]);
      for (int k = 0; k < g.dim; ++k) {
        const ExactScalar& cc = g.c.at(i, j, k);
        if (!cc.is_zero()) lhs = lhs - ms[size_t(k)].scaled(cc);
      }
      rep.residual = std::max(rep.residual, lhs.max_abs());
      if (!lhs.is_zero() && rep.pass) {
        rep.pass = false;
        rep.details = "pair (" + g.basis_labels[size_t(i)] + ", " + g.basis_labels[size_t(j)] +
                      ") mismatches the constants";
      }
    }
  return rep;
}

std::vector<CheckReport> check_algebra(const LieAlgebra& g) {
  std::vector<CheckReport> out{check_antisymmetry(g), check_jacobi(g), check_field_tag(g)};
  if (g.realization) out.push_back(check_realization(g));
  return out;
}

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  if (g.field != h.field)
    throw Error("direct_product: field mismatch between " + g.name + " (" +
                field_name(g.field) + ") and " + h.name + " (" + field_name(h.field) + ")");
  LieAlgebra p;
  p.name = g.name + " x " + h.name;
  p.field = g.field;
  p.dim = g.dim + h.dim;
  p.c = StructureConstants(p.dim);
  for (int i = 0; i < g.dim; ++i) {
    p.basis_labels.push_back(g.basis_labels[size_t(i)] + "(1)");
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) p.c.at(i, j, k) = g.c.at(i, j, k);
  }
  for (int i = 0; i < h.dim; ++i) {
    p.basis_labels.push_back(h.basis_labels[size_t(i)] + "(2)");
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        p.c.at(g.dim + i, g.dim + j, g.dim + k) = h.c.at(i, j, k);
  }
  if (g.realization && h.realization) {
    int mg = (*g.realization)[0].rows(), mh = (*h.realization)[0].rows();
    std::vector<ExactMat> ms;
    for (int i = 0; i < g.dim; ++i) {
      ExactMat m(mg + mh, mg + mh);
      for (int a = 0; a < mg; ++a)
        for (int b = 0; b < mg; ++b) m(a, b) = g.matrix(i)(a, b);
      ms.push_back(std::move(m));
    }
    for (int i = 0; i < h.dim; ++i) {
      ExactMat m(mg + mh, mg + mh);
      for (int a = 0; a < mh; ++a)
        for (int b = 0; b < mh; ++b) m(mg + a, mg + b) = h.matrix(i)(a, b);
      ms.push_back(std::move(m));
    }
    p.realization = std::move(ms);
  }
  return p;
}

LieAlgebra algebra_from_realization(std::string name, FieldTag field,
                                    std::vector<std::string> labels,
                                    std::vector<ExactMat> matrices) {
  const int n = int(matrices.size());
  if (n == 0) throw Error("algebra_from_realization: empty basis for " + name);
  const int m = matrices[0].rows();
  ExactMat span(m * m, n);  // basis matrices flattened into columns
  for (int b = 0; b < n; ++b)
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) span(r * m + s, b) = matrices[size_t(b)](r, s);

  // exact normal equations, assembled once for all bracket pairs
  ExactMat adj = span.dagger();
  auto gram_inv = (adj * span).inverse();
  if (!gram_inv)
    throw Error("algebra_from_realization(" + name + "): basis matrices are dependent");

  LieAlgebra g;
  g.name = std::move(name);
  g.field = field;
  g.dim = n;
  g.basis_labels = std::move(labels);
  g.c = StructureConstants(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactMat br = comm(matrices[size_t(i)], matrices[size_t(j)]);
      ExactMat rhs(m * m, 1);
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) rhs(r * m + s, 0) = br(r, s);
      ExactMat x = *gram_inv * (adj * rhs);
      if (!(span * x == rhs))
        throw Error("algebra_from_realization(" + g.name + "): bracket of basis " +
                    std::to_string(i) + "," + std::to_string(j) + " leaves the span");
      for (int k = 0; k < n; ++k) {
        if (field == FieldTag::Real && !x(k, 0).is_real())
          throw Error("algebra_from_realization(" + g.name +
                      "): non-real structure constant for a Real-tagged algebra");
        g.c.at(i, j, k) = x(k, 0);
        g.c.at(j, i, k) = -x(k, 0);
      }
    }
  g.realization = std::move(matrices);
  return g;
}

}  // namespace lie
