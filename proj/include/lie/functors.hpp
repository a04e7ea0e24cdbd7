#ifndef LIE_FUNCTORS_HPP
#define LIE_FUNCTORS_HPP

#include "lie/morphism.hpp"

namespace lie {

/// An element X + iY of a complexified algebra, kept as the pair of
/// real-algebra coordinate vectors.
struct ComplexifiedElement {
  ExactVec x, y;
};

/// Complexification of a real algebra: same basis and constants reread over
/// C, plus the embedding (X, Y) -> X + iY into those coordinates.
struct Complexification {
  LieAlgebra algebra;

  ExactVec embed(const ExactVec& x, const ExactVec& y) const {
    ExactVec out(x.size());
    for (size_t k = 0; k < x.size(); ++k)
      out[k] = x[k] + ExactScalar::i() * y[k];
    return out;
  }
};

Complexification complexify(const LieAlgebra& g);

/// Pair-form bracket [(X,Y),(X',Y')] = ([X,X']-[Y,Y'], [X,Y']+[Y,X']) over
/// the underlying real algebra.
ComplexifiedElement pair_bracket(const LieAlgebra& g, const ComplexifiedElement& a,
                                 const ComplexifiedElement& b);

/// Real algebra of doubled dimension with basis (X_1..X_n, iX_1..iX_n);
/// a realization extends by M_{n+k} = i M_k.
LieAlgebra scalar_restrict(const LieAlgebra& g);

/// Same bracket, conjugated scalar action: constants conjugated entrywise.
LieAlgebra conjugate_algebra(const LieAlgebra& g);

/// Theta: (g^R)_C -> g x conj(g), (X, Y) -> (X + iY, X - iY). Invertible with
/// inverse (A, B) -> ((A+B)/2, (A-B)/2i).
AlgebraMorphism theta(const LieAlgebra& g);

/// For algebras with real structure constants: the coordinate-conjugation map
/// g -> conj(g) (identity matrix, antilinear). Errors on a non-real constant.
AlgebraMorphism conj_iso_real_constants(const LieAlgebra& g);

/// Theta with the conjugate factor identified back with g itself; valid
/// exactly when the structure constants are real.
AlgebraMorphism corollary_iso(const LieAlgebra& g);

/// J with J^2 = -id on a real algebra's coordinates.
struct ComplexStructureMap {
  ExactMat J;
};

/// Multiplication by i on g^R in the (X_k, iX_k) basis: [[0, -I], [I, 0]].
ComplexStructureMap canonical_complex_structure(int real_dim);

/// Eigenspace split of (g^R)_C under a complex structure, via the projectors
/// P± = (id ∓ iJ)/2. Rows of plus/minus span ker(J ∓ i id).
struct SplitResult {
  ExactMat plus_basis;
  ExactMat minus_basis;
  bool dims_ok = false;
  bool plus_closed = false;
  bool minus_closed = false;
  bool cross_commutes = false;  // [g+, g-] = 0
};

SplitResult split_by_complex_structure(const LieAlgebra& gR_C, const ComplexStructureMap& j);

/// C-linear extension of a real-linear morphism out of g^R: same matrix,
/// complexified source. Input must itself pass check_morphism.
AlgebraMorphism complexify_morphism(const AlgebraMorphism& phi);

/// Restriction of a morphism out of (g^R)_C back to the real form.
AlgebraMorphism restrict_morphism(const AlgebraMorphism& psi);

/// Complexifies both sides of a morphism between real algebras.
AlgebraMorphism complexify_real_morphism(const AlgebraMorphism& m);

}  // namespace lie

#endif
