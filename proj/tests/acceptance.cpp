// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "lie/field.hpp"
#include "lie/functors.hpp"
#include "lie/json_io.hpp"
#include "lie/verify.hpp"

using namespace lie;

namespace {

int g_failures = 0;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void criterion(const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!pass) ++g_failures;
}

bool suite_green(const std::vector<CheckReport>& reports, std::string& sick) {
  for (const auto& r : reports)
    if (!r.pass) {
      sick = r.check + " on " + r.subject + ": " + r.details;
      return false;
    }
  return true;
}

double uniform(std::mt19937& rng, double lo, double hi) {
  return lo + double(rng() >> 5) * (1.0 / 134217728.0) * (hi - lo);
}

LorentzParams draw(std::mt19937& rng, double comp) {
  LorentzParams p;
  for (int a = 0; a < 3; ++a) {
    p.theta[size_t(a)] = uniform(rng, -comp, comp);
    p.gamma[size_t(a)] = uniform(rng, -comp, comp);
  }
  return p;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string path = "acceptance_cli_out.txt";
  int rc = std::system((std::string(LIE_CLI_PATH) + " " + args + " > " + path + " 2>&1").c_str());
  if (out) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
  }
  std::remove(path.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

}  // namespace

int main() {
  std::string sick;

  // 1. catalog soundness: exact antisymmetry, Jacobi and realization checks
  {
    bool ok = suite_green(verify_catalog(default_fetch()), sick);
    criterion("1 catalog soundness (exact, zero residual)", ok, ok ? "" : sick);
  }

  // 2. theta on sl2C, gl(2,C), abelian C^2 and sl(3,C), plus projector split
  {
    bool ok = suite_green(verify_theorem1(), sick);
    criterion("2 theta isomorphism + projector split (exact)", ok, ok ? "" : sick);
  }

  // 3. corollary for sl2C: (g^R)_C equals g x g exactly
  {
    bool ok = suite_green(verify_corollary(), sick);
    criterion("3 real-constants corollary on sl2C (exact)", ok, ok ? "" : sick);
  }

  // 4. hom correspondence on >= 20 randomized bracket-preserving maps
  {
    bool ok = suite_green(verify_hom(24), sick);
    criterion("4 hom correspondence round trips, 24 draws (exact)", ok, ok ? "" : sick);
  }

  // 5. so(1,3)_C to su(2)_C x su(2)_C via eta±/xi and via the so(4) route
  {
    bool ok = suite_green(verify_so13(), sick) && suite_green(verify_so4(), sick);
    criterion("5 so(1,3)_C decomposition by both routes (exact)", ok, ok ? "" : sick);
  }

  // 6. representation family 2j <= 6: brackets, dims, casimirs, commuting
  //    factors, all exact in the integer ladder convention
  {
    bool ok = true;
    std::string bad;
    for (int t1 = 0; t1 <= 6 && ok; ++t1)
      for (int t2 = 0; t2 <= 6 && ok; ++t2) {
        IrrepLabel label{HalfInt(t1), HalfInt(t2)};
        ExactRep r = lorentz_irrep(label);
        if (r.dim != label.dimension() || !rep_check(r).pass ||
            !casimir_check(r, label).pass) {
          ok = false;
          bad = label.str();
          break;
        }
        auto plus = hermitian_generators_plus(r);
        auto minus = hermitian_generators_minus(r);
        for (const auto& p : plus)
          for (const auto& m : minus)
            if (!comm(p, m).is_zero()) {
              ok = false;
              bad = label.str() + " factors do not commute";
            }
      }
    criterion("6 (j1,j2) family through 2j = 6: dims, brackets, casimirs (exact)", ok, bad);
  }

  // 7. group suite at the pinned tolerances
  {
    std::mt19937 rng(2718);
    NumericRep fund = to_numeric(fundamental_rep(catalog_get("so13").algebra));
    CMat eta = minkowski_metric();
    double metric_res = 0, det_res = 0;
    bool d00 = true;
    for (int t = 0; t < 200; ++t) {
      LorentzParams p = draw(rng, 1.7);  // component bound keeps |theta|,|gamma| <= 3
      CMat d = lorentz_element(p, fund);
      metric_res = std::max(metric_res, (d.transpose() * eta * d - eta).max_abs());
      det_res = std::max(det_res, std::abs(d.det() - cplx(1, 0)));
      if (d(0, 0).real() < 1.0 - 1e-12) d00 = false;
    }
    criterion("7a fundamental: ‖DᵀηD−η‖∞ ≤ 1e-10 over 200 draws", metric_res <= 1e-10,
              "max " + sci(metric_res));
    criterion("7b fundamental: |det D − 1| ≤ 1e-10 and D00 ≥ 1", det_res <= 1e-10 && d00,
              "max " + sci(det_res));

    double dual = 0;
    for (int t = 0; t < 100; ++t) {
      LorentzParams p = draw(rng, 1.5);
      dual = std::max(dual,
                      (lambda_left(p) - *lambda_right(p).dagger().inverse()).max_abs());
    }
    criterion("7c lambda_L = (lambda_R†)^{-1} ≤ 1e-10 over 100 draws", dual <= 1e-10,
              "max " + sci(dual));

    NumericRep spinor = lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)});
    double cover = 0;
    for (int axis = 0; axis < 3; ++axis) {
      LorentzParams p;
      p.theta[size_t(axis)] = 2 * std::numbers::pi;
      cover = std::max(cover, (lorentz_element(p, spinor) + CMat::identity(2)).max_abs());
    }
    criterion("7d (1/2,0) rotation by 2π equals −I ≤ 1e-10 (double cover)", cover <= 1e-10,
              "max " + sci(cover));

    double blocks = 0;
    for (int t = 0; t < 40; ++t) {
      LorentzParams p = draw(rng, 1.5);
      CMat d = lambda_dirac(p);
      CMat upper(2, 2), lower(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          upper(i, j) = d(i, j);
          lower(i, j) = d(2 + i, 2 + j);
          blocks = std::max(blocks, std::abs(d(i, 2 + j)));
          blocks = std::max(blocks, std::abs(d(2 + i, j)));
        }
      blocks = std::max(blocks, (lower - *upper.dagger().inverse()).max_abs());
    }
    criterion("7e dirac blocks: lower = (upper†)^{-1} ≤ 1e-10", blocks <= 1e-10,
              "max " + sci(blocks));
  }

  // 8. non-unitarity with ‖gamma‖ >= 0.5 in every non-trivial label 2j <= 2
  {
    std::mt19937 rng(3141);
    bool ok = true;
    double weakest = 1e300;
    for (int t1 = 0; t1 <= 2; ++t1)
      for (int t2 = 0; t2 <= 2; ++t2) {
        if (t1 == 0 && t2 == 0) continue;
        NumericRep rep = lorentz_irrep_symmetric({HalfInt(t1), HalfInt(t2)});
        for (int t = 0; t < 10; ++t) {
          LorentzParams p = draw(rng, 1.5);
          p.gamma[0] += p.gamma[0] >= 0 ? 0.5 : -0.5;
          CMat d = lorentz_element(p, rep);
          double defect = (d.dagger() * d - CMat::identity(rep.dim)).max_abs();
          weakest = std::min(weakest, defect);
          if (defect <= 1e-3) ok = false;
        }
      }
    criterion("8 non-unitarity: ‖D†D−I‖∞ > 1e-3 whenever ‖γ‖ ≥ 0.5", ok,
              "weakest defect " + sci(weakest));
  }

  // 9. field law: exact shift, no scalar mixing, exact translation composition
  {
    SampledField f;
    f.rep = {FieldRep::Kind::Irrep, {HalfInt(0), HalfInt(0)}};
    f.grid.origin = {0, 0, 0, 0};
    f.grid.spacing = {0.5, 1, 1, 1};
    f.grid.extents = {6, 3, 2, 2};
    for (long long k = 0; k < f.grid.points(); ++k)
      f.values.push_back(cplx(0.25 * double(k), -0.5 * double(k % 7)));

    SampledField shifted = transform_field(f, {}, {1.0, 0, 0, 0});
    bool shift_exact = true;
    for (long long pt = 0; pt < f.grid.points(); ++pt) {
      auto k = f.grid.unflatten(pt);
      if (k[0] < 2) {
        if (shifted.covered(pt) || shifted.values[size_t(pt)] != cplx{}) shift_exact = false;
      } else {
        auto src = k;
        src[0] -= 2;
        if (shifted.values[size_t(pt)] != f.values[size_t(f.grid.flatten(src))])
          shift_exact = false;
      }
    }
    criterion("9a pure lattice-aligned translation is an exact sample shift", shift_exact);

    // affine samples interpolate exactly, so a boosted scalar field must
    // reproduce the closed-form pullback with no component scaling
    SampledField affine = f;
    for (long long pt = 0; pt < affine.grid.points(); ++pt) {
      auto k = affine.grid.unflatten(pt);
      affine.values[size_t(pt)] =
          cplx(1.0 + 2.0 * (affine.grid.origin[0] + k[0] * affine.grid.spacing[0]) -
                   0.5 * (affine.grid.origin[1] + k[1] * affine.grid.spacing[1]),
               0.25 * k[2] - 0.75 * k[3]);
    }
    LorentzParams boost;
    boost.gamma = {0.3, 0, 0};
    SampledField b = transform_field(affine, boost, {0, 0, 0, 0});
    double ch = std::cosh(0.3), sh = std::sinh(0.3);
    double mix_res = 0.0;
    long long covered = 0;
    for (long long pt = 0; pt < b.grid.points(); ++pt) {
      if (!b.covered(pt)) continue;
      ++covered;
      auto k = b.grid.unflatten(pt);
      double t = b.grid.origin[0] + k[0] * b.grid.spacing[0];
      double x = b.grid.origin[1] + k[1] * b.grid.spacing[1];
      std::array<double, 4> y{ch * t - sh * x, -sh * t + ch * x, double(k[2]) * 1.0,
                              double(k[3]) * 1.0};
      cplx expect(1.0 + 2.0 * y[0] - 0.5 * y[1], 0.25 * y[2] - 0.75 * y[3]);
      mix_res = std::max(mix_res, std::abs(b.values[size_t(pt)] - expect));
    }
    criterion("9b scalar field: argument moves, components unscaled",
              covered > 0 && mix_res <= 1e-10, "max " + sci(mix_res));

    SampledField one =
        transform_field(transform_field(f, {}, {0.5, 0, 0, 0}), {}, {1.0, 1, 0, 0});
    SampledField two = transform_field(f, {}, {1.5, 1, 0, 0});
    criterion("9c translation composition slice holds exactly", one.values == two.values);
  }

  // 10. CLI: verify all exits 0; a seeded mutation exits 1 with a
  //     counterexample; --json output is byte-stable
  {
    int clean = run_cli("verify all");
    criterion("10a `verify all` exits 0", clean == 0, "exit " + std::to_string(clean));

    std::string out;
    int mutated = run_cli("verify all --mutate sl2C:0,1,1", &out);
    criterion("10b seeded mutation exits 1 with a counterexample",
              mutated == 1 && out.find("violated at") != std::string::npos,
              "exit " + std::to_string(mutated));

    std::string a, b;
    run_cli("verify casimir --json", &a);
    run_cli("verify casimir --json", &b);
    criterion("10c --json reports are byte-identical across runs", !a.empty() && a == b);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria FAILED")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
