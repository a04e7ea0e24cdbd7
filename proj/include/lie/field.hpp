#ifndef LIE_FIELD_HPP
#define LIE_FIELD_HPP

#include <cstdint>

#include "lie/group.hpp"

namespace lie {

/// Which finite-dimensional D(Lambda) acts on the field components.
struct FieldRep {
  enum class Kind { Irrep, Dirac };
  Kind kind = Kind::Irrep;
  IrrepLabel label;  // used when kind == Irrep

  int dimension() const { return kind == Kind::Dirac ? 4 : label.dimension(); }
  NumericRep representation() const;
  std::string str() const { return kind == Kind::Dirac ? "dirac" : label.str(); }
};

/// Axis-aligned lattice over R^{1,3}; axis 0 is time.
struct GridSpec {
  std::array<double, 4> origin{0, 0, 0, 0};
  std::array<double, 4> spacing{1, 1, 1, 1};
  std::array<int, 4> extents{1, 1, 1, 1};

  long long points() const {
    return 1LL * extents[0] * extents[1] * extents[2] * extents[3];
  }
  std::array<int, 4> unflatten(long long idx) const;
  long long flatten(const std::array<int, 4>& k) const;
  bool contains(const std::array<int, 4>& k) const;
};

/// d components per lattice point, flat row-major over points then
/// components. mask[p] == 0 marks points whose pullback left the lattice.
struct SampledField {
  FieldRep rep;
  GridSpec grid;
  std::vector<cplx> values;
  std::vector<std::uint8_t> mask;  // empty means fully covered

  int components() const { return rep.dimension(); }
  cplx* at(long long point) { return values.data() + point * components(); }
  const cplx* at(long long point) const { return values.data() + point * components(); }
  bool covered(long long point) const { return mask.empty() || mask[size_t(point)] != 0; }
};

enum class Execution { Serial, Parallel };

/// Output value at x is D(Lambda) f(Lambda^{-1}(x - a)), f evaluated by
/// multilinear interpolation; pullbacks outside the lattice zero-fill and
/// clear the mask. A pure translation by a whole number of lattice steps
/// reduces to an exact sample shift.
///
/// The Parallel path runs the identical per-point kernel under OpenMP and is
/// bitwise-equal to Serial.
SampledField transform_field(const SampledField& f, const LorentzParams& p,
                             const std::array<double, 4>& a,
                             Execution exec = Execution::Parallel, double tol = 1e-12);

/// Fraction of output points flagged out-of-domain.
double uncovered_fraction(const SampledField& f);

}  // namespace lie

#endif
