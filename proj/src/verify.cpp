#include "lie/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lie/functors.hpp"
#include "lie/group.hpp"

namespace lie {

namespace {

CheckReport flag(std::string check, std::string subject, std::string context, bool pass,
                 double residual = 0.0, std::string details = "") {
  return {std::move(check), std::move(subject), std::move(context), true, pass, residual,
          std::move(details)};
}

CheckReport float_flag(std::string check, std::string subject, std::string context, bool pass,
                       double residual, std::string details = "") {
  return {std::move(check), std::move(subject), std::move(context), false, pass, residual,
          std::move(details)};
}

double uniform(std::mt19937& rng, double lo, double hi) {
  // fixed bit recipe so draws do not depend on the standard library
  double u = double(rng() >> 5) * (1.0 / 134217728.0);  // 27 bits in [0,1)
  return lo + u * (hi - lo);
}

LorentzParams draw_params(std::mt19937& rng, double comp) {
  LorentzParams p;
  for (int a = 0; a < 3; ++a) {
    p.theta[size_t(a)] = uniform(rng, -comp, comp);
    p.gamma[size_t(a)] = uniform(rng, -comp, comp);
  }
  return p;
}

}  // namespace

AlgebraFetch default_fetch() {
  return [](const std::string& key) { return catalog_get(key).algebra; };
}

std::vector<CheckReport> verify_catalog(const AlgebraFetch& fetch) {
  std::vector<CheckReport> out;
  for (const auto& key : catalog_keys()) {
    LieAlgebra g = fetch(key);
    for (auto& rep : check_algebra(g)) out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> verify_theorem1() {
  std::vector<CheckReport> out;
  for (const char* key : {"sl2C", "gl(2,C)", "abelian(2,C)", "sl(3,C)"}) {
    LieAlgebra g = catalog_get(key).algebra;
    AlgebraMorphism th = theta(g);
    MorphismReport mr = check_morphism(th);
    CheckReport r = mr;
    r.check = "theta";
    r.context = "(g^R)_C isomorphic to g x conj(g)";
    r.pass = mr.pass && mr.invertible;
    if (!mr.invertible && r.details.empty()) r.details = "theta matrix is singular";
    out.push_back(r);

    // theta composed with its inverse is the identity
    AlgebraMorphism round = compose(invert(th), th);
    bool ident = round.T == ExactMat::identity(th.source.dim);
    out.push_back(flag("theta_inverse", th.source.name, "theta^{-1} theta = id", ident));

    // projector split under the canonical J reproduces theta's two factors
    auto split = split_by_complex_structure(th.source, canonical_complex_structure(2 * g.dim));
    ExactMat tinv = invert(th).T;
    const int n = g.dim;
    ExactMat first(n, 2 * n), second(n, 2 * n);
    for (int k = 0; k < n; ++k)
      for (int r2 = 0; r2 < 2 * n; ++r2) {
        first(k, r2) = tinv(r2, k);
        second(k, r2) = tinv(r2, n + k);
      }
    bool match = split.dims_ok && split.plus_closed && split.minus_closed &&
                 split.cross_commutes && same_row_space(split.plus_basis, first) &&
                 same_row_space(split.minus_basis, second);
    out.push_back(flag("projector_split", g.name,
                       "ker(J -/+ i id) equal theta^{-1} images of the factors", match, 0.0,
                       match ? "" : "projector split disagrees with theta"));
  }
  return out;
}

std::vector<CheckReport> verify_corollary() {
  std::vector<CheckReport> out;
  LieAlgebra g = catalog_get("sl2C").algebra;

  MorphismReport conj_rep = check_morphism(conj_iso_real_constants(g));
  CheckReport c1 = conj_rep;
  c1.check = "conj_iso";
  c1.context = "coordinate conjugation g -> conj(g)";
  c1.pass = conj_rep.pass && conj_rep.invertible;
  out.push_back(c1);

  // with real constants conj(g) equals g entrywise
  out.push_back(flag("conj_collapse", g.name, "conj(g) has the constants of g",
                     same_structure(conjugate_algebra(g), g)));

  AlgebraMorphism cor = corollary_iso(g);
  MorphismReport mr = check_morphism(cor);
  CheckReport c2 = mr;
  c2.check = "corollary";
  c2.context = "(g^R)_C isomorphic to g x g";
  c2.pass = mr.pass && mr.invertible;
  out.push_back(c2);
  return out;
}

namespace {

// exp(t ad_X) and exp(s ad_Y) on sl2C are polynomial in t, hence exact
// automorphisms for rational parameters
ExactMat sl2_ad(int which) {
  ExactMat m(3, 3);
  if (which == 1) {  // ad_X: H -> -2X, Y -> H
    m(1, 0) = ExactScalar{-2};
    m(0, 2) = ExactScalar{1};
  } else {  // ad_Y: H -> 2Y, X -> -H
    m(2, 0) = ExactScalar{2};
    m(0, 1) = ExactScalar{-1};
  }
  return m;
}

ExactMat exp_nilpotent(const ExactMat& a) {
  ExactMat acc = ExactMat::identity(a.rows());
  ExactMat term = ExactMat::identity(a.rows());
  Rat factorial{1};
  for (int k = 1; k <= a.rows(); ++k) {
    term = term * a;
    factorial *= k;
    if (term.is_zero()) break;
    acc += term.scaled(ExactScalar{Rat(1) / factorial});
  }
  return acc;
}

AlgebraMorphism random_sl2R_morphism(const LieAlgebra& sl2c, const LieAlgebra& sl2c_r,
                                     std::mt19937& rng) {
  ExactMat aut = ExactMat::identity(3);
  for (int word = 0; word < 3; ++word) {
    long num = long(rng() % 13) - 6;
    long den = 1 + long(rng() % 4);
    int which = 1 + int(rng() % 2);
    aut = aut * exp_nilpotent(sl2_ad(which).scaled(ExactScalar::of(num, den)));
  }
  // inclusion sl2C^R -> sl2C: X_k -> X_k, iX_k -> i X_k
  ExactMat incl(3, 6);
  for (int k = 0; k < 3; ++k) {
    incl(k, k) = ExactScalar{1};
    incl(k, 3 + k) = ExactScalar::i();
  }
  return {sl2c_r, sl2c, aut * incl, Linearity::Linear};
}

}  // namespace

std::vector<CheckReport> verify_hom(int draws) {
  std::vector<CheckReport> out;
  LieAlgebra sl2c = catalog_get("sl2C").algebra;
  LieAlgebra sl2c_r = catalog_get("sl2C_R").algebra;
  std::mt19937 rng(137);

  int ok_morphism = 0, ok_round = 0;
  for (int d = 0; d < draws; ++d) {
    AlgebraMorphism phi = random_sl2R_morphism(sl2c, sl2c_r, rng);
    if (check_morphism(phi).pass) ++ok_morphism;
    AlgebraMorphism psi = complexify_morphism(phi);
    AlgebraMorphism back = restrict_morphism(psi);
    AlgebraMorphism again = complexify_morphism(back);
    bool round = back.T == phi.T && same_structure(back.source, phi.source) &&
                 again.T == psi.T && same_structure(again.source, psi.source);
    if (round) ++ok_round;
  }
  out.push_back(flag("hom_family", "sl2C^R -> sl2C",
                     "randomized bracket-preserving maps stay morphisms",
                     ok_morphism == draws, 0.0,
                     std::to_string(ok_morphism) + "/" + std::to_string(draws) + " draws"));
  out.push_back(flag("hom_round_trip", "sl2C^R -> sl2C",
                     "restrict after extend and extend after restrict are the identity",
                     ok_round == draws, 0.0,
                     std::to_string(ok_round) + "/" + std::to_string(draws) + " draws"));

  // zero map round trip
  AlgebraMorphism zero{sl2c_r, sl2c, ExactMat(3, 6), Linearity::Linear};
  AlgebraMorphism zpsi = complexify_morphism(zero);
  out.push_back(flag("hom_zero", "sl2C^R -> sl2C", "zero map extends to the zero map",
                     zpsi.T.is_zero() && restrict_morphism(zpsi).T.is_zero()));
  return out;
}

std::vector<CheckReport> verify_so13() {
  std::vector<CheckReport> out;

  MorphismReport eta = check_morphism(eta_pm_basis());
  CheckReport r1 = eta;
  r1.check = "eta_pm";
  r1.context = "so(1,3)_C -> su(2)_C x su(2)_C via eta± = (eta ± iK)/2";
  r1.pass = eta.pass && eta.invertible;
  out.push_back(r1);

  MorphismReport xi = check_morphism(xi_basis_change());
  CheckReport r2 = xi;
  r2.check = "xi_basis";
  r2.context = "su(2)_C -> sl(2,C) via xi1=H, xi2=X, xi3=Y";
  r2.pass = xi.pass && xi.invertible;
  out.push_back(r2);

  // full chain: so(1,3)_C -> su(2)_C x su(2)_C -> sl2C x sl2C -> (sl2C^R)_C
  AlgebraMorphism chain = compose(
      invert(corollary_iso(catalog_get("sl2C").algebra)),
      compose(product_morphism(xi_basis_change(), xi_basis_change()), eta_pm_basis()));
  MorphismReport cr = check_morphism(chain);
  CheckReport r3 = cr;
  r3.check = "so13_chain";
  r3.context = "so(1,3)_C isomorphic to (sl(2,C)^R)_C";
  r3.pass = cr.pass && cr.invertible;
  out.push_back(r3);

  // so(4) route: so(1,3)_C -> so(4)_C -> (su(2) x su(2))_C
  AlgebraMorphism so4_route = compose(complexify_real_morphism(so4_split()),
                                      invert(so4_complex_match()));
  MorphismReport sr = check_morphism(so4_route);
  CheckReport r4 = sr;
  r4.check = "so13_via_so4";
  r4.context = "so(1,3)_C -> su(2)_C x su(2)_C through the iA relabeling and B± split";
  r4.pass = sr.pass && sr.invertible;
  out.push_back(r4);
  return out;
}

std::vector<CheckReport> verify_so4() {
  std::vector<CheckReport> out;

  MorphismReport match = check_morphism(so4_complex_match());
  CheckReport r1 = match;
  r1.check = "so4_complex_match";
  r1.context = "so(4)_C -> so(1,3)_C with iA_j -> K_j, B_j -> eta_j";
  r1.pass = match.pass && match.invertible;
  out.push_back(r1);

  MorphismReport split = check_morphism(so4_split());
  CheckReport r2 = split;
  r2.check = "so4_split";
  r2.context = "so(4) -> su(2) x su(2) via B± = (B ± A)/2, over R";
  r2.pass = split.pass && split.invertible;
  out.push_back(r2);

  MorphismReport csplit = check_morphism(complexify_real_morphism(so4_split()));
  CheckReport r3 = csplit;
  r3.check = "so4_split_C";
  r3.context = "the same split after complexification";
  r3.pass = csplit.pass && csplit.invertible;
  out.push_back(r3);
  return out;
}

std::vector<CheckReport> verify_casimir(int max_twice) {
  std::vector<CheckReport> out;
  for (int t1 = 0; t1 <= max_twice; ++t1)
    for (int t2 = 0; t2 <= max_twice; ++t2) {
      IrrepLabel label{HalfInt(t1), HalfInt(t2)};
      ExactRep rep = lorentz_irrep(label);
      bool dim_ok = rep.dim == label.dimension();

      CheckReport rc = rep_check(rep);
      rc.check = "lorentz_rep";
      rc.subject = "label " + label.str();
      if (!dim_ok) {
        rc.pass = false;
        rc.details = "dimension " + std::to_string(rep.dim) + " != (2j1+1)(2j2+1)";
      }
      out.push_back(rc);
      out.push_back(casimir_check(rep, label));

      // the two su(2) factors commute
      auto plus = hermitian_generators_plus(rep);
      auto minus = hermitian_generators_minus(rep);
      bool commute = true;
      for (const auto& pgen : plus)
        for (const auto& mgen : minus)
          if (!comm(pgen, mgen).is_zero()) commute = false;
      out.push_back(flag("factor_commute", "label " + label.str(),
                         "[i eta+_a, i eta-_b] = 0", commute));
    }
  return out;
}

std::vector<CheckReport> verify_lambda(double tol) {
  std::vector<CheckReport> out;
  std::mt19937 rng(421);
  NumericRep fund = to_numeric(fundamental_rep(catalog_get("so13").algebra));
  const CMat eta_metric = minkowski_metric();

  double metric_res = 0.0, det_res = 0.0;
  bool d00_ok = true;
  for (int d = 0; d < 200; ++d) {
    LorentzParams p = draw_params(rng, 1.7);
    CMat dm = lorentz_element(p, fund, tol);
    metric_res = std::max(metric_res,
                          (dm.transpose() * eta_metric * dm - eta_metric).max_abs());
    det_res = std::max(det_res, std::abs(dm.det() - cplx(1.0, 0.0)));
    if (dm(0, 0).real() < 1.0 - 1e-12) d00_ok = false;
  }
  out.push_back(float_flag("metric", "fundamental rep",
                           "D^T eta D = eta over 200 draws", metric_res <= 1e-10, metric_res));
  out.push_back(float_flag("determinant", "fundamental rep", "det D = 1 over 200 draws",
                           det_res <= 1e-10, det_res));
  out.push_back(float_flag("orthochronous", "fundamental rep", "D_00 >= 1 over 200 draws",
                           d00_ok, 0.0));

  double dual_res = 0.0;
  for (int d = 0; d < 100; ++d) {
    LorentzParams p = draw_params(rng, 1.5);
    CMat left = lambda_left(p, tol);
    CMat right_dag_inv = *lambda_right(p, tol).dagger().inverse();
    dual_res = std::max(dual_res, (left - right_dag_inv).max_abs());
  }
  out.push_back(float_flag(
      "weyl_duality", "lambda_L / lambda_R", "lambda_L = (lambda_R†)^{-1} over 100 draws",
      dual_res <= 1e-10, dual_res,
      "lambda_R is exp(-(i theta - gamma)·sigma/2); the sign variant "
      "exp((theta - i gamma)·sigma/2) breaks this duality and is rejected"));

  // spinor double cover: a 2 pi rotation about each axis gives -I
  NumericRep left_rep = lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)});
  double cover_res = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    LorentzParams p;
    p.theta[size_t(axis)] = 2.0 * std::numbers::pi;
    CMat dm = lorentz_element(p, left_rep, tol);
    cover_res = std::max(cover_res, (dm + CMat::identity(2)).max_abs());
  }
  out.push_back(float_flag("double_cover", "(1/2,0)", "2 pi rotation equals -I",
                           cover_res <= 1e-10, cover_res));

  // Dirac block structure
  NumericRep dirac = direct_sum(lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)}),
                                lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)}));
  double block_res = 0.0, dirac_res = 0.0;
  for (int d = 0; d < 25; ++d) {
    LorentzParams p = draw_params(rng, 1.5);
    CMat full = lambda_dirac(p, tol);
    dirac_res = std::max(dirac_res, (full - lorentz_element(p, dirac, tol)).max_abs());
    CMat upper(2, 2), lower(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        upper(i, j) = full(i, j);
        lower(i, j) = full(2 + i, 2 + j);
        block_res = std::max(block_res, std::abs(full(i, 2 + j)));
        block_res = std::max(block_res, std::abs(full(2 + i, j)));
      }
    block_res = std::max(block_res, (lower - *upper.dagger().inverse()).max_abs());
  }
  out.push_back(float_flag("dirac_blocks", "(1/2,0) ⊕ (0,1/2)",
                           "block diagonal with lower = (upper†)^{-1}", block_res <= 1e-10,
                           block_res));
  out.push_back(float_flag("dirac_vs_exp", "(1/2,0) ⊕ (0,1/2)",
                           "lambda_D equals the exponential of the direct-sum rep",
                           dirac_res <= 1e-10, dirac_res));

  // consistency of the closed Weyl forms with the generic exponential
  NumericRep right_rep = lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)});
  double cons_res = 0.0;
  for (int d = 0; d < 25; ++d) {
    LorentzParams p = draw_params(rng, 1.5);
    cons_res = std::max(cons_res,
                        (lambda_left(p, tol) - lorentz_element(p, left_rep, tol)).max_abs());
    cons_res = std::max(cons_res,
                        (lambda_right(p, tol) - lorentz_element(p, right_rep, tol)).max_abs());
  }
  out.push_back(float_flag("weyl_vs_exp", "(1/2,0), (0,1/2)",
                           "closed sigma forms equal the generic exponential",
                           cons_res <= 1e-10, cons_res));

  // boosts are never unitary in a non-trivial finite-dimensional rep
  bool witness = true;
  double min_defect = 1e300;
  for (int t1 = 0; t1 <= 2; ++t1)
    for (int t2 = 0; t2 <= 2; ++t2) {
      if (t1 == 0 && t2 == 0) continue;
      NumericRep rep = lorentz_irrep_symmetric({HalfInt(t1), HalfInt(t2)});
      for (int d = 0; d < 10; ++d) {
        LorentzParams p = draw_params(rng, 1.5);
        p.gamma[0] += p.gamma[0] >= 0 ? 0.5 : -0.5;  // keeps |gamma| >= 0.5
        CMat dm = lorentz_element(p, rep, tol);
        double defect = (dm.dagger() * dm - CMat::identity(rep.dim)).max_abs();
        min_defect = std::min(min_defect, defect);
        if (defect <= 1e-3) witness = false;
      }
    }
  out.push_back(float_flag("non_unitary", "labels with 2j <= 2",
                           "boosted D has ‖D†D - I‖ > 1e-3", witness, min_defect));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"catalog", "theorem1", "corollary", "hom",
                                              "so13",    "so4",      "casimir",   "lambda"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const AlgebraFetch& fetch,
                                    double tol) {
  auto run_one = [&](const std::string& suite) -> SuiteResult {
    if (suite == "catalog") return {suite, verify_catalog(fetch)};
    if (suite == "theorem1") return {suite, verify_theorem1()};
    if (suite == "corollary") return {suite, verify_corollary()};
    if (suite == "hom") return {suite, verify_hom()};
    if (suite == "so13") return {suite, verify_so13()};
    if (suite == "so4") return {suite, verify_so4()};
    if (suite == "casimir") return {suite, verify_casimir()};
    if (suite == "lambda") return {suite, verify_lambda(tol)};
    throw Error("unknown verification suite '" + suite + "'");
  };
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) out.push_back(run_one(suite));
  } else {
    out.push_back(run_one(name));
  }
  return out;
}

}  // namespace lie
