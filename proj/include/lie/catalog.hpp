#ifndef LIE_CATALOG_HPP
#define LIE_CATALOG_HPP

#include "lie/functors.hpp"
#include "lie/morphism.hpp"

namespace lie {

struct CatalogEntry {
  std::string key;
  LieAlgebra algebra;
  std::string provenance;
};

/// All supported keys in listing order. Fixed keys carry the classical bases
/// (su2, so3, sl2R, sl2C, sl2C_R, so13, so4); parenthesized keys are generic
/// builders over elementary matrices: gl(n,R|C), sl(n,R|C), so(n), su(n) and
/// abelian(n,R|C), all with n <= 4.
const std::vector<std::string>& catalog_keys();

CatalogEntry catalog_get(const std::string& key);

/// beta_i -> J_i on the shared structure constants.
AlgebraMorphism su2_so3_iso();

/// su(2)_C -> sl(2,C) identifying xi1 = -2i b3 with H, xi2 = -i(b1 - i b2)
/// with X and xi3 = -i(b1 + i b2) with Y.
AlgebraMorphism xi_basis_change();

/// so(1,3)_C -> su(2)_C x su(2)_C via eta±_i = (eta_i ± i K_i)/2.
AlgebraMorphism eta_pm_basis();

/// so(4)_C -> so(1,3)_C matching iA_j with K_j and B_j with eta_j.
AlgebraMorphism so4_complex_match();

/// so(4) -> su(2) x su(2) via B±_i = (B_i ± A_i)/2 (a real isomorphism).
AlgebraMorphism so4_split();

/// Splits a traceless 2x2 complex matrix as M = A + iB with both parts
/// anti-hermitian traceless: A = (M - M†)/2, B = (M + M†)/2i.
struct Sl2Decomposition {
  ExactMat anti_hermitian;        // A
  ExactMat anti_hermitian_times_i;  // B
};
Sl2Decomposition decompose_sl2_element(const ExactMat& m);

}  // namespace lie

#endif
