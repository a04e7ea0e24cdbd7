#ifndef LIE_REPS_HPP
#define LIE_REPS_HPP

#include "lie/algebra.hpp"

namespace lie {

/// Non-negative half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  HalfInt() = default;
  explicit HalfInt(int twice_value) : twice(twice_value) {
    if (twice < 0) throw Error("HalfInt: negative value " + std::to_string(twice_value));
  }

  double value() const { return twice / 2.0; }
  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  /// Accepts "k" or "k/2" only.
  static HalfInt parse(std::string_view s);

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
};

/// (j1, j2) labelling a Lorentz irrep of dimension (2j1+1)(2j2+1).
struct IrrepLabel {
  HalfInt j1, j2;
  int dimension() const { return (j1.twice + 1) * (j2.twice + 1); }
  std::string str() const { return "(" + j1.str() + "," + j2.str() + ")"; }
  friend bool operator==(IrrepLabel a, IrrepLabel b) { return a.j1 == b.j1 && a.j2 == b.j2; }
};

/// Per-generator operator matrices on a complex carrier space.
template <class S>
struct BasicRep {
  LieAlgebra algebra;
  std::optional<IrrepLabel> label;
  int dim = 0;
  std::vector<Mat<S>> rho;
  std::vector<std::string> basis_labels;
};

using ExactRep = BasicRep<ExactScalar>;
using NumericRep = BasicRep<cplx>;

/// Ladder normalization for the spin matrices. Integer keeps every entry a
/// (Gaussian) rational so bracket and Casimir identities hold exactly;
/// Symmetric uses the sqrt((j∓m)(j±m+1)) entries that make the hermitian
/// combinations genuinely hermitian.
enum class LadderConvention { Integer, Symmetric };

/// Spin-j representation of the {H, X, Y} basis: rho(H) = diag(2j, ..., -2j),
/// rho(X)/rho(Y) the raising and lowering ladders.
ExactRep su2_irrep(HalfInt j);
NumericRep su2_irrep_symmetric(HalfInt j);

/// The (j1, j2) Lorentz representation on the so13 basis {K1..K3, eta1..eta3}:
///   rho(eta_a) = -i (S1_a ⊗ I + I ⊗ S2_a),  rho(K_a) = -(S1_a ⊗ I - I ⊗ S2_a),
/// with S1/S2 the spin-j1/j2 matrices. Carrier basis ordered by m1 then m2,
/// both descending.
ExactRep lorentz_irrep(IrrepLabel label);
NumericRep lorentz_irrep_symmetric(IrrepLabel label);

/// i rho(eta±_a) for a rep built on the so13 basis; in the (j1, j2)
/// construction these are S1_a ⊗ I and I ⊗ S2_a.
template <class S>
std::vector<Mat<S>> hermitian_generators_plus(const BasicRep<S>& r);
template <class S>
std::vector<Mat<S>> hermitian_generators_minus(const BasicRep<S>& r);

/// Verifies sum_a (i rho(eta+_a))^2 = j1(j1+1) I and the j2 analogue.
CheckReport casimir_check(const ExactRep& r, IrrepLabel label);
CheckReport casimir_check(const NumericRep& r, IrrepLabel label, double tol);

template <class S>
BasicRep<S> direct_sum(const BasicRep<S>& a, const BasicRep<S>& b);

/// Residual of rho([X_i, X_j]) - [rho(X_i), rho(X_j)] over all basis pairs.
CheckReport rep_check(const ExactRep& r);
CheckReport rep_check(const NumericRep& r, double tol);

/// The algebra's own matrices as a representation of itself.
ExactRep fundamental_rep(const LieAlgebra& g);

NumericRep to_numeric(const ExactRep& r);

/// Display name and associated physical object for the classical labels;
/// empty strings for labels without a conventional name.
struct IrrepInfo {
  std::string name;
  std::string particle;
};
IrrepInfo irrep_info(IrrepLabel label);

}  // namespace lie

#endif
