#include "lie/matrix.hpp"

namespace lie {

int rref(ExactMat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(piv, rank);
    m.scale_row(rank, m(rank, col).inverse());
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      m.axpy_row(r, rank, m(r, col));
    }
    ++rank;
  }
  return rank;
}

bool same_row_space(const ExactMat& a, const ExactMat& b) {
  if (a.cols() != b.cols()) return false;
  ExactMat ra = a, rb = b;
  int rka = rref(ra), rkb = rref(rb);
  if (rka != rkb) return false;
  for (int i = 0; i < rka; ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (ra(i, j) != rb(i, j)) return false;
  return true;
}

bool in_row_space(const ExactMat& basis, const std::vector<ExactScalar>& v) {
  ExactMat stacked(basis.rows() + 1, basis.cols());
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j) stacked(i, j) = basis(i, j);
  for (int j = 0; j < basis.cols(); ++j) stacked(basis.rows(), j) = v[size_t(j)];
  ExactMat base = basis;
  return rref(stacked) == rref(base);
}

std::optional<std::vector<ExactScalar>> solve_exact(const ExactMat& a,
                                                    const std::vector<ExactScalar>& b) {
  ExactMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[size_t(i)];
  }
  rref(aug);
  std::vector<ExactScalar> x(size_t(a.cols()));
  // read solution off the echelon form; a pivot in the last column means
  // the system is inconsistent
  int row = 0;
  for (int col = 0; col <= a.cols() && row < a.rows(); ++col) {
    if (col == a.cols()) {
      if (!aug(row, col).is_zero()) return std::nullopt;
      break;
    }
    if (aug(row, col) == ExactScalar{1}) {
      x[size_t(col)] = aug(row, a.cols());
      ++row;
    }
  }
  for (; row < a.rows(); ++row)
    if (!aug(row, a.cols()).is_zero()) return std::nullopt;
  // verify (guards against free columns silently zeroed)
  for (int i = 0; i < a.rows(); ++i) {
    ExactScalar acc;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[size_t(j)];
    if (acc != b[size_t(i)]) return std::nullopt;
  }
  return x;
}

CMat to_cmat(const ExactMat& m) {
  CMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_cplx();
  return r;
}

}  // namespace lie
