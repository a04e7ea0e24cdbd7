#ifndef LIE_VERIFY_HPP
#define LIE_VERIFY_HPP

#include <functional>

#include "lie/catalog.hpp"

namespace lie {

/// Source of catalog algebras for the check suites; the CLI substitutes a
/// mutating wrapper to demonstrate counterexample detection.
using AlgebraFetch = std::function<LieAlgebra(const std::string&)>;

AlgebraFetch default_fetch();

/// Every catalog entry: antisymmetry, Jacobi, field tag and realization.
std::vector<CheckReport> verify_catalog(const AlgebraFetch& fetch);

/// theta: (g^R)_C -> g x conj(g) is exact, invertible and bracket-preserving
/// for sl2C, gl(2,C), abelian(2,C) and sl(3,C), and the canonical-J projector
/// split reproduces the same two subspaces.
std::vector<CheckReport> verify_theorem1();

/// For real structure constants the conjugate factor collapses: sl2C gives
/// (g^R)_C isomorphic to g x g, exactly.
std::vector<CheckReport> verify_corollary();

/// C-linear extension and restriction are mutually inverse on a randomized
/// family of bracket-preserving maps out of sl2C^R.
std::vector<CheckReport> verify_hom(int draws = 24);

/// so(1,3)_C decomposes as su(2)_C x su(2)_C, via the eta± combinations plus
/// the xi identification, and independently via the so(4) route.
std::vector<CheckReport> verify_so13();

/// so(4) splits as su(2) x su(2) over R, and matches so(1,3) after
/// complexification.
std::vector<CheckReport> verify_so4();

/// Exact bracket, dimension and Casimir identities for the (j1, j2) family.
std::vector<CheckReport> verify_casimir(int max_twice = 3);

/// Float group checks: metric preservation, Weyl duality, double cover,
/// Dirac block structure and non-unitarity witnesses.
std::vector<CheckReport> verify_lambda(double tol);

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;
  bool all_pass() const {
    for (const auto& r : reports)
      if (!r.pass) return false;
    return true;
  }
};

/// Known suite names in order: catalog, theorem1, corollary, hom, so13, so4,
/// casimir, lambda.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"); throws Error for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, const AlgebraFetch& fetch,
                                    double tol);

}  // namespace lie

#endif
