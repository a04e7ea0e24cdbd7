#include "lie/field.hpp"

#include <cmath>

#include "lie/catalog.hpp"

namespace lie {

NumericRep FieldRep::representation() const {
  if (kind == Kind::Dirac)
    return direct_sum(lorentz_irrep_symmetric({HalfInt(1), HalfInt(0)}),
                      lorentz_irrep_symmetric({HalfInt(0), HalfInt(1)}));
  return lorentz_irrep_symmetric(label);
}

std::array<int, 4> GridSpec::unflatten(long long idx) const {
  std::array<int, 4> k;
  for (int j = 3; j >= 0; --j) {
    k[size_t(j)] = int(idx % extents[size_t(j)]);
    idx /= extents[size_t(j)];
  }
  return k;
}

long long GridSpec::flatten(const std::array<int, 4>& k) const {
  long long idx = 0;
  for (int j = 0; j < 4; ++j) idx = idx * extents[size_t(j)] + k[size_t(j)];
  return idx;
}

bool GridSpec::contains(const std::array<int, 4>& k) const {
  for (int j = 0; j < 4; ++j)
    if (k[size_t(j)] < 0 || k[size_t(j)] >= extents[size_t(j)]) return false;
  return true;
}

namespace {

bool all_zero(const LorentzParams& p) {
  for (int a = 0; a < 3; ++a)
    if (p.theta[size_t(a)] != 0.0 || p.gamma[size_t(a)] != 0.0) return false;
  return true;
}

// integer lattice shift when every a_j is a whole number of steps
std::optional<std::array<long long, 4>> aligned_shift(const GridSpec& g,
                                                      const std::array<double, 4>& a) {
  std::array<long long, 4> shift{};
  for (int j = 0; j < 4; ++j) {
    double s = a[size_t(j)] / g.spacing[size_t(j)];
    if (!std::isfinite(s) || s != std::floor(s) || std::abs(s) > 1e15) return std::nullopt;
    shift[size_t(j)] = (long long)(s);
  }
  return shift;
}

struct Interpolator {
  const SampledField& f;
  int d;

  // multilinear sample at fractional index t; false when a needed corner is
  // missing (outside the lattice or masked off in the input)
  bool sample(const std::array<double, 4>& t, cplx* out) const {
    std::array<int, 4> base;
    std::array<double, 4> frac;
    for (int j = 0; j < 4; ++j) {
      double fl = std::floor(t[size_t(j)]);
      base[size_t(j)] = int(fl);
      frac[size_t(j)] = t[size_t(j)] - fl;
    }
    for (int c = 0; c < d; ++c) out[c] = cplx{};
    for (int corner = 0; corner < 16; ++corner) {
      double w = 1.0;
      std::array<int, 4> k = base;
      for (int j = 0; j < 4; ++j) {
        if (corner & (1 << j)) {
          w *= frac[size_t(j)];
          k[size_t(j)] += 1;
        } else {
          w *= 1.0 - frac[size_t(j)];
        }
      }
      if (w == 0.0) continue;
      if (!f.grid.contains(k)) return false;
      long long p = f.grid.flatten(k);
      if (!f.covered(p)) return false;
      const cplx* v = f.at(p);
      for (int c = 0; c < d; ++c) out[c] += w * v[c];
    }
    return true;
  }
};

}  // namespace

SampledField transform_field(const SampledField& f, const LorentzParams& p,
                             const std::array<double, 4>& a, Execution exec, double tol) {
  const int d = f.components();
  if ((long long)(f.values.size()) != f.grid.points() * d)
    throw Error("transform_field: " + std::to_string(f.values.size()) + " values for " +
                std::to_string(f.grid.points()) + " points with " + std::to_string(d) +
                " components");
  const long long npts = f.grid.points();

  SampledField out;
  out.rep = f.rep;
  out.grid = f.grid;
  out.values.assign(f.values.size(), cplx{});
  out.mask.assign(size_t(npts), 1);

  if (all_zero(p)) {
    if (auto shift = aligned_shift(f.grid, a)) {
      // D is the identity and the pullback lands on lattice nodes: copy
      // samples exactly instead of going through interpolation
      for (long long idx = 0; idx < npts; ++idx) {
        std::array<int, 4> k = f.grid.unflatten(idx);
        bool inside = true;
        for (int j = 0; j < 4; ++j) {
          long long src = k[size_t(j)] - (*shift)[size_t(j)];
          if (src < 0 || src >= f.grid.extents[size_t(j)]) {
            inside = false;
            break;
          }
          k[size_t(j)] = int(src);
        }
        if (!inside) {
          out.mask[size_t(idx)] = 0;
          continue;
        }
        long long src_idx = f.grid.flatten(k);
        if (!f.covered(src_idx)) {
          out.mask[size_t(idx)] = 0;
          continue;
        }
        const cplx* v = f.at(src_idx);
        for (int c = 0; c < d; ++c) out.at(idx)[c] = v[c];
      }
      return out;
    }
  }

  const CMat dmat = lorentz_element(p, f.rep.representation(), tol);
  const CMat linv = lorentz_element(p.negated(), to_numeric(fundamental_rep(
                                        catalog_get("so13").algebra)), tol);
  const Interpolator interp{f, d};

  auto kernel = [&](long long idx, cplx* scratch) {
    std::array<int, 4> k = f.grid.unflatten(idx);
    std::array<double, 4> x, y, t;
    for (int j = 0; j < 4; ++j)
      x[size_t(j)] = f.grid.origin[size_t(j)] + k[size_t(j)] * f.grid.spacing[size_t(j)] -
                     a[size_t(j)];
    for (int i = 0; i < 4; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) acc += linv(i, j).real() * x[size_t(j)];
      y[size_t(i)] = acc;
    }
    for (int j = 0; j < 4; ++j)
      t[size_t(j)] = (y[size_t(j)] - f.grid.origin[size_t(j)]) / f.grid.spacing[size_t(j)];

    if (!interp.sample(t, scratch)) {
      out.mask[size_t(idx)] = 0;
      return;
    }
    cplx* o = out.at(idx);
    for (int i = 0; i < d; ++i) {
      cplx acc{};
      for (int j = 0; j < d; ++j) acc += dmat(i, j) * scratch[j];
      o[i] = acc;
    }
  };

  if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<cplx> scratch(static_cast<size_t>(d), cplx{});
#pragma omp for schedule(static)
      for (long long idx = 0; idx < npts; ++idx) kernel(idx, scratch.data());
    }
    return out;
#endif
  }
  std::vector<cplx> scratch(static_cast<size_t>(d), cplx{});
  for (long long idx = 0; idx < npts; ++idx) kernel(idx, scratch.data());
  return out;
}

double uncovered_fraction(const SampledField& f) {
  if (f.mask.empty() || f.grid.points() == 0) return 0.0;
  long long n = 0;
  for (auto m : f.mask)
    if (m == 0) ++n;
  return double(n) / double(f.grid.points());
}

}  // namespace lie
