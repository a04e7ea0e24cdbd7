#ifndef LIE_MORPHISM_HPP
#define LIE_MORPHISM_HPP

#include "lie/algebra.hpp"

namespace lie {

/// CoordinateAntilinear means "conjugate source coordinates, then apply T".
enum class Linearity { Linear, CoordinateAntilinear };

inline const char* linearity_name(Linearity l) {
  return l == Linearity::Linear ? "linear" : "antilinear";
}

/// A linear (or coordinate-antilinear) map between algebras, stored as the
/// matrix of images of the source basis in target coordinates.
struct AlgebraMorphism {
  LieAlgebra source;
  LieAlgebra target;
  ExactMat T;  // target.dim x source.dim
  Linearity linearity = Linearity::Linear;

  ExactVec apply(const ExactVec& v) const;
};

AlgebraMorphism identity_morphism(const LieAlgebra& g);

/// f after g; requires g.target and f.source structurally equal.
AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g);

/// Inverse of a bijective morphism (antilinear maps invert to antilinear).
AlgebraMorphism invert(const AlgebraMorphism& m);

/// Block map between direct products: (x, y) -> (f(x), g(y)).
AlgebraMorphism product_morphism(const AlgebraMorphism& f, const AlgebraMorphism& g);

/// Verifies that the map commutes with the bracket on every basis pair and
/// reports whether T is invertible.
struct MorphismReport : CheckReport {
  bool invertible = false;
};

MorphismReport check_morphism(const AlgebraMorphism& m);

}  // namespace lie

#endif
