#include "lie/reps.hpp"

#include <cmath>

#include "lie/catalog.hpp"

namespace lie {

HalfInt HalfInt::parse(std::string_view s) {
  auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(s)) throw Error("half-integer parse: expected \"k\" or \"k/2\", got '" +
                                   std::string(s) + "'");
    return HalfInt(2 * std::stoi(std::string(s)));
  }
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_digits(num) || den != "2")
    throw Error("half-integer parse: expected \"k\" or \"k/2\", got '" + std::string(s) + "'");
  return HalfInt(std::stoi(std::string(num)));
}

namespace {

std::string half_str(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

ExactRep su2_irrep(HalfInt j) {
  // integer ladder on the m = j, j-1, ..., -j basis: X carries the weights,
  // Y is the unit subdiagonal shift
  const int t = j.twice;
  const int d = t + 1;
  ExactRep r;
  r.algebra = catalog_get("sl2C").algebra;
  r.label = IrrepLabel{j, HalfInt(0)};
  r.dim = d;
  r.rho.assign(3, ExactMat(d, d));
  for (int k = 0; k < d; ++k) {
    r.rho[0](k, k) = ExactScalar{t - 2 * k};
    r.basis_labels.push_back("m=" + half_str(t - 2 * k));
  }
  for (int k = 1; k < d; ++k) {
    r.rho[1](k - 1, k) = ExactScalar{long(k) * (t - k + 1)};
    r.rho[2](k, k - 1) = ExactScalar{1};
  }
  return r;
}

namespace {

std::vector<std::string> tensor_labels(HalfInt j1, HalfInt j2) {
  std::vector<std::string> out;
  for (int k1 = 0; k1 <= j1.twice; ++k1)
    for (int k2 = 0; k2 <= j2.twice; ++k2)
      out.push_back("m1=" + half_str(j1.twice - 2 * k1) + ",m2=" + half_str(j2.twice - 2 * k2));
  return out;
}

// hermitian-combination spin matrices (S_x, S_y, S_z) from an {H, X, Y} rep
template <class S>
std::vector<Mat<S>> spin_triple(const BasicRep<S>& r) {
  using Ops = ScalarOps<S>;
  const auto& h = r.rho[0];
  const auto& x = r.rho[1];
  const auto& y = r.rho[2];
  std::vector<Mat<S>> s;
  s.push_back((x + y).scaled(Ops::frac(1, 2)));
  s.push_back((x - y).scaled(Ops::imag_frac(-1, 2)));
  s.push_back(h.scaled(Ops::frac(1, 2)));
  return s;
}

template <class S>
BasicRep<S> lorentz_from_spins(IrrepLabel label, const BasicRep<S>& rep1,
                               const BasicRep<S>& rep2) {
  using Ops = ScalarOps<S>;
  auto s1 = spin_triple(rep1);
  auto s2 = spin_triple(rep2);
  const int d1 = rep1.dim, d2 = rep2.dim;
  Mat<S> id1 = Mat<S>::identity(d1), id2 = Mat<S>::identity(d2);

  BasicRep<S> r;
  r.algebra = catalog_get("so13").algebra;
  r.label = label;
  r.dim = d1 * d2;
  r.basis_labels = tensor_labels(label.j1, label.j2);
  for (int a = 0; a < 3; ++a) {
    Mat<S> left = kron(s1[size_t(a)], id2);
    Mat<S> right = kron(id1, s2[size_t(a)]);
    r.rho.push_back((left - right).scaled(Ops::frac(-1, 1)));  // K_a
  }
  for (int a = 0; a < 3; ++a) {
    Mat<S> left = kron(s1[size_t(a)], id2);
    Mat<S> right = kron(id1, s2[size_t(a)]);
    r.rho.push_back((left + right).scaled(Ops::imag_frac(-1, 1)));  // eta_a
  }
  return r;
}

}  // namespace

NumericRep su2_irrep_symmetric(HalfInt j) {
  const int t = j.twice;
  const int d = t + 1;
  NumericRep r;
  r.algebra = catalog_get("sl2C").algebra;
  r.label = IrrepLabel{j, HalfInt(0)};
  r.dim = d;
  r.rho.assign(3, CMat(d, d));
  for (int k = 0; k < d; ++k) {
    r.rho[0](k, k) = double(t - 2 * k);
    r.basis_labels.push_back("m=" + half_str(t - 2 * k));
  }
  for (int k = 1; k < d; ++k) {
    double w = std::sqrt(double(k) * double(t - k + 1));
    r.rho[1](k - 1, k) = w;
    r.rho[2](k, k - 1) = w;
  }
  return r;
}

ExactRep lorentz_irrep(IrrepLabel label) {
  return lorentz_from_spins(label, su2_irrep(label.j1), su2_irrep(label.j2));
}

NumericRep lorentz_irrep_symmetric(IrrepLabel label) {
  return lorentz_from_spins(label, su2_irrep_symmetric(label.j1),
                            su2_irrep_symmetric(label.j2));
}

template <class S>
std::vector<Mat<S>> hermitian_generators_plus(const BasicRep<S>& r) {
  using Ops = ScalarOps<S>;
  std::vector<Mat<S>> out;
  for (int a = 0; a < 3; ++a)
    out.push_back(r.rho[size_t(3 + a)].scaled(Ops::imag_frac(1, 2)) -
                  r.rho[size_t(a)].scaled(Ops::frac(1, 2)));
  return out;
}

template <class S>
std::vector<Mat<S>> hermitian_generators_minus(const BasicRep<S>& r) {
  using Ops = ScalarOps<S>;
  std::vector<Mat<S>> out;
  for (int a = 0; a < 3; ++a)
    out.push_back(r.rho[size_t(3 + a)].scaled(Ops::imag_frac(1, 2)) +
                  r.rho[size_t(a)].scaled(Ops::frac(1, 2)));
  return out;
}

template std::vector<ExactMat> hermitian_generators_plus(const ExactRep&);
template std::vector<CMat> hermitian_generators_plus(const NumericRep&);
template std::vector<ExactMat> hermitian_generators_minus(const ExactRep&);
template std::vector<CMat> hermitian_generators_minus(const NumericRep&);

namespace {

template <class S>
CheckReport casimir_impl(const BasicRep<S>& r, IrrepLabel label, double tol) {
  using Ops = ScalarOps<S>;
  CheckReport rep{"casimir", "label " + label.str(),
                  "sum_a (i rho(eta±_a))^2 = j(j+1) id", Ops::exact, true, 0.0, ""};
  auto run = [&](const std::vector<Mat<S>>& gens, HalfInt j, const char* side) {
    Mat<S> acc(r.dim, r.dim);
    for (const auto& g : gens) acc += g * g;
    long t = j.twice;
    Mat<S> expect = Mat<S>::identity(r.dim).scaled(Ops::frac(t * (t + 2), 4));
    Mat<S> diff = acc - expect;
    rep.residual = std::max(rep.residual, diff.max_abs());
    bool ok = Ops::exact ? diff.is_zero() : diff.max_abs() <= tol;
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.details = std::string(side) + " casimir differs from " + std::to_string(t) + "(" +
                    std::to_string(t + 2) + ")/4 by " + std::to_string(diff.max_abs());
    }
  };
  run(hermitian_generators_plus(r), label.j1, "plus");
  run(hermitian_generators_minus(r), label.j2, "minus");
  return rep;
}

template <class S>
CheckReport rep_check_impl(const BasicRep<S>& r, double tol) {
  using Ops = ScalarOps<S>;
  CheckReport rep{"rep_check", r.algebra.name + " rep dim " + std::to_string(r.dim),
                  "rho([X_i,X_j]) = [rho(X_i), rho(X_j)]", Ops::exact, true, 0.0, ""};
  const int n = r.algebra.dim;
  if (int(r.rho.size()) != n)
    throw Error("rep_check: " + std::to_string(r.rho.size()) + " generators for algebra dim " +
                std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<S> lhs = comm(r.rho[size_t(i)], r.rho[size_t(j)]);
      for (int k = 0; k < n; ++k) {
        const ExactScalar& cc = r.algebra.c.at(i, j, k);
        if (cc.is_zero()) continue;
        if constexpr (Ops::exact)
          lhs = lhs - r.rho[size_t(k)].scaled(cc);
        else
          lhs = lhs - r.rho[size_t(k)].scaled(cc.to_cplx());
      }
      rep.residual = std::max(rep.residual, lhs.max_abs());
      bool ok = Ops::exact ? lhs.is_zero() : lhs.max_abs() <= tol;
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.details = "generator pair (" + r.algebra.basis_labels[size_t(i)] + ", " +
                      r.algebra.basis_labels[size_t(j)] + ") violates the constants";
      }
    }
  return rep;
}

}  // namespace

CheckReport casimir_check(const ExactRep& r, IrrepLabel label) {
  return casimir_impl(r, label, 0.0);
}
CheckReport casimir_check(const NumericRep& r, IrrepLabel label, double tol) {
  return casimir_impl(r, label, tol);
}

CheckReport rep_check(const ExactRep& r) { return rep_check_impl(r, 0.0); }
CheckReport rep_check(const NumericRep& r, double tol) { return rep_check_impl(r, tol); }

template <class S>
BasicRep<S> direct_sum(const BasicRep<S>& a, const BasicRep<S>& b) {
  if (!same_structure(a.algebra, b.algebra))
    throw Error("direct_sum: summands represent different algebras (" + a.algebra.name +
                " vs " + b.algebra.name + ")");
  BasicRep<S> r;
  r.algebra = a.algebra;
  r.dim = a.dim + b.dim;
  r.basis_labels = a.basis_labels;
  r.basis_labels.insert(r.basis_labels.end(), b.basis_labels.begin(), b.basis_labels.end());
  for (size_t g = 0; g < a.rho.size(); ++g) {
    Mat<S> m(r.dim, r.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m(i, j) = a.rho[g](i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.rho[g](i, j);
    r.rho.push_back(std::move(m));
  }
  return r;
}

template ExactRep direct_sum(const ExactRep&, const ExactRep&);
template NumericRep direct_sum(const NumericRep&, const NumericRep&);

ExactRep fundamental_rep(const LieAlgebra& g) {
  if (!g.realization)
    throw Error("fundamental_rep(" + g.name + "): algebra has no matrix realization");
  ExactRep r;
  r.algebra = g;
  r.dim = (*g.realization)[0].rows();
  r.rho = *g.realization;
  for (int k = 0; k < r.dim; ++k) r.basis_labels.push_back("v" + std::to_string(k));
  return r;
}

NumericRep to_numeric(const ExactRep& r) {
  NumericRep out;
  out.algebra = r.algebra;
  out.label = r.label;
  out.dim = r.dim;
  out.basis_labels = r.basis_labels;
  for (const auto& m : r.rho) out.rho.push_back(to_cmat(m));
  return out;
}

IrrepInfo irrep_info(IrrepLabel label) {
  const int a = label.j1.twice, b = label.j2.twice;
  if (a == 0 && b == 0) return {"scalar", "Higgs field"};
  if (a == 1 && b == 0) return {"left spinor", "left-handed neutrino"};
  if (a == 0 && b == 1) return {"right spinor", "right-handed anti-neutrino"};
  if (a == 1 && b == 1) return {"vector", "gauge bosons"};
  if (a == 2 && b == 2) return {"tensor", "graviton"};
  return {"", ""};
}

}  // namespace lie
