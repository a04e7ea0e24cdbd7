#ifndef LIE_ALGEBRA_HPP
#define LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lie/matrix.hpp"

namespace lie {

enum class FieldTag { Real, Complex };

inline const char* field_name(FieldTag f) { return f == FieldTag::Real ? "R" : "C"; }

using ExactVec = std::vector<ExactScalar>;

/// Structure constants c(i,j,k): the X_k coefficient of [X_i, X_j].
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int n) : n_(n), d_(size_t(n) * n * n) {}

  int dim() const { return n_; }
  ExactScalar& at(int i, int j, int k) { return d_[idx(i, j, k)]; }
  const ExactScalar& at(int i, int j, int k) const { return d_[idx(i, j, k)]; }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  size_t idx(int i, int j, int k) const { return (size_t(i) * n_ + j) * n_ + k; }
  int n_ = 0;
  std::vector<ExactScalar> d_;
};

/// A finite-dimensional Lie algebra given by structure constants over exact
/// Gaussian-rational scalars, optionally carrying a matrix realization.
/// A Real field tag asserts that every constant has zero imaginary part.
struct LieAlgebra {
  std::string name;
  FieldTag field = FieldTag::Real;
  int dim = 0;
  std::vector<std::string> basis_labels;
  StructureConstants c;
  std::optional<std::vector<ExactMat>> realization;

  const ExactMat& matrix(int i) const { return (*realization)[size_t(i)]; }
};

/// Structural identity: same dimension, field and constants (names and
/// realizations may differ).
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

/// Outcome of one verification; exact checks report the first counterexample,
/// float checks a max residual against a tolerance.
struct CheckReport {
  std::string check;
  std::string subject;
  std::string context;  // which identity / construction is being verified
  bool exact = true;
  bool pass = false;
  double residual = 0.0;
  std::string details;
};

/// [x, y] in coordinates: z_k = sum_{i,j} c(i,j,k) x_i y_j.
ExactVec bracket(const LieAlgebra& g, const ExactVec& x, const ExactVec& y);

CheckReport check_antisymmetry(const LieAlgebra& g);
CheckReport check_jacobi(const LieAlgebra& g);
CheckReport check_field_tag(const LieAlgebra& g);

/// Verifies M_i M_j - M_j M_i = sum_k c(i,j,k) M_k for the attached matrices.
CheckReport check_realization(const LieAlgebra& g);

/// Runs every applicable consistency check on g.
std::vector<CheckReport> check_algebra(const LieAlgebra& g);

/// Block direct product: no cross brackets, realizations combined
/// block-diagonally when both sides have one.
LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);

/// Builds an algebra from a matrix basis, solving exactly for the structure
/// constants. Fails if some bracket leaves the span of the basis.
LieAlgebra algebra_from_realization(std::string name, FieldTag field,
                                    std::vector<std::string> labels,
                                    std::vector<ExactMat> matrices);

ExactVec zero_vec(int n);
ExactVec basis_vec(int n, int k);

}  // namespace lie

#endif
