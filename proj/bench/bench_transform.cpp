// Times the field-transform kernel, serial against OpenMP, and checks the
// two paths agree bitwise.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "lie/field.hpp"

using namespace lie;

namespace {

SampledField make_field(FieldRep rep, int extent) {
  SampledField f;
  f.rep = rep;
  f.grid.origin = {-1.0, -1.0, -1.0, -1.0};
  for (int j = 0; j < 4; ++j) {
    f.grid.spacing[size_t(j)] = 2.0 / (extent - 1);
    f.grid.extents[size_t(j)] = extent;
  }
  const int d = rep.dimension();
  f.values.resize(size_t(f.grid.points()) * d);
  for (long long pt = 0; pt < f.grid.points(); ++pt) {
    auto k = f.grid.unflatten(pt);
    for (int c = 0; c < d; ++c)
      f.values[size_t(pt) * d + c] =
          cplx(std::sin(0.37 * k[0] + 0.11 * k[1] + c), std::cos(0.23 * k[2] - 0.41 * k[3]));
  }
  return f;
}

double time_ms(Execution exec, const SampledField& f, const LorentzParams& p,
               const std::array<double, 4>& a, SampledField& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = transform_field(f, p, a, exec);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int extent = 20;
  int reps = 3;
  if (argc > 1) extent = std::atoi(argv[1]);
  if (argc > 2) reps = std::atoi(argv[2]);

  LorentzParams p;
  p.theta = {0.3, 0.0, 0.4};
  p.gamma = {0.2, 0.1, 0.0};
  std::array<double, 4> a{0.05, -0.02, 0.0, 0.01};

  std::printf("%-10s %8s %12s %12s %9s %s\n", "rep", "lattice", "serial[ms]", "openmp[ms]",
              "speedup", "bitwise");
  for (FieldRep rep : {FieldRep{FieldRep::Kind::Irrep, {HalfInt(0), HalfInt(0)}},
                       FieldRep{FieldRep::Kind::Irrep, {HalfInt(1), HalfInt(1)}},
                       FieldRep{FieldRep::Kind::Dirac, {}}}) {
    SampledField f = make_field(rep, extent);
    SampledField serial_out, parallel_out;
    double ts = 1e300, tp = 1e300;
    for (int r = 0; r < reps; ++r) {
      SampledField tmp;
      ts = std::min(ts, time_ms(Execution::Serial, f, p, a, tmp));
      if (r + 1 == reps) serial_out = tmp;
      tp = std::min(tp, time_ms(Execution::Parallel, f, p, a, tmp));
      if (r + 1 == reps) parallel_out = tmp;
    }
    bool same = serial_out.values.size() == parallel_out.values.size() &&
                std::memcmp(serial_out.values.data(), parallel_out.values.data(),
                            serial_out.values.size() * sizeof(cplx)) == 0 &&
                serial_out.mask == parallel_out.mask;
    std::printf("%-10s %5d^4 %12.2f %12.2f %8.2fx %s\n", rep.str().c_str(), extent, ts, tp,
                ts / tp, same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
