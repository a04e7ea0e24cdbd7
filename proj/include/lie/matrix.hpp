#ifndef LIE_MATRIX_HPP
#define LIE_MATRIX_HPP

#include <optional>
#include <vector>

#include "lie/scalar.hpp"

namespace lie {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return {1}; }
  static ExactScalar frac(long num, long den) { return ExactScalar::of(num, den); }
  static ExactScalar imag_frac(long num, long den) { return ExactScalar::imag(num, den); }
  static bool is_zero(const ExactScalar& s) { return s.is_zero(); }
  static ExactScalar conj(const ExactScalar& s) { return s.conj(); }
  static ExactScalar inv(const ExactScalar& s) { return s.inverse(); }
  static double abs(const ExactScalar& s) { return s.abs_approx(); }
};

template <>
struct ScalarOps<cplx> {
  static constexpr bool exact = false;
  static cplx zero() { return {}; }
  static cplx one() { return {1.0, 0.0}; }
  static cplx frac(long num, long den) { return {double(num) / double(den), 0.0}; }
  static cplx imag_frac(long num, long den) { return {0.0, double(num) / double(den)}; }
  static bool is_zero(const cplx& s) { return s == cplx{}; }
  static cplx conj(const cplx& s) { return std::conj(s); }
  static cplx inv(const cplx& s) { return 1.0 / s; }
  static double abs(const cplx& s) { return std::abs(s); }
};

/// Dense row-major matrix. Dimensions in this project stay below ~50, so the
/// only concession to speed is skipping exact-zero factors in products.
template <class S>
class Mat {
 public:
  using Ops = ScalarOps<S>;

  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols, Ops::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Ops::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return d_[size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return d_[size_t(i) * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o, "+");
    Mat r = *this;
    for (size_t k = 0; k < d_.size(); ++k) r.d_[k] += o.d_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    require_same_shape(o, "-");
    Mat r = *this;
    for (size_t k = 0; k < d_.size(); ++k) r.d_[k] -= o.d_[k];
    return r;
  }
  Mat& operator+=(const Mat& o) {
    require_same_shape(o, "+=");
    for (size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_)
      throw Error("matrix product: inner dimensions " + std::to_string(cols_) + " vs " +
                  std::to_string(o.rows_));
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& aik = (*this)(i, k);
        if (Ops::is_zero(aik)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  Mat scaled(const S& s) const {
    Mat r = *this;
    for (auto& v : r.d_) v = v * s;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Mat conjugate() const {
    Mat r = *this;
    for (auto& v : r.d_) v = Ops::conj(v);
    return r;
  }
  Mat dagger() const { return transpose().conjugate(); }

  bool is_zero() const {
    for (const auto& v : d_)
      if (!Ops::is_zero(v)) return false;
    return true;
  }

  /// Largest entry magnitude (exact entries measured approximately).
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : d_) m = std::max(m, Ops::abs(v));
    return m;
  }

  /// Maximum absolute row sum.
  double norm_inf() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (int j = 0; j < cols_; ++j) s += Ops::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }
  /// Maximum absolute column sum.
  double norm_one() const { return transpose().norm_inf(); }

  S trace() const {
    S t = Ops::zero();
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Gauss-Jordan inverse; nullopt for singular input. Exact scalars pivot on
  /// the first nonzero entry, floats on the largest.
  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    Mat a = *this;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      if constexpr (Ops::exact) {
        for (int r = col; r < n; ++r)
          if (!Ops::is_zero(a(r, col))) {
            piv = r;
            break;
          }
      } else {
        double best = 0.0;
        for (int r = col; r < n; ++r)
          if (Ops::abs(a(r, col)) > best) {
            best = Ops::abs(a(r, col));
            piv = r;
          }
      }
      if (piv < 0) return std::nullopt;
      a.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      S scale = Ops::inv(a(col, col));
      a.scale_row(col, scale);
      inv.scale_row(col, scale);
      for (int r = 0; r < n; ++r) {
        if (r == col || Ops::is_zero(a(r, col))) continue;
        S f = a(r, col);
        a.axpy_row(r, col, f);
        inv.axpy_row(r, col, f);
      }
    }
    return inv;
  }

  /// Determinant by elimination on a working copy.
  S det() const {
    if (rows_ != cols_) throw Error("det: non-square matrix");
    Mat a = *this;
    S result = Ops::one();
    for (int col = 0; col < rows_; ++col) {
      int piv = -1;
      if constexpr (Ops::exact) {
        for (int r = col; r < rows_; ++r)
          if (!Ops::is_zero(a(r, col))) {
            piv = r;
            break;
          }
      } else {
        double best = 0.0;
        for (int r = col; r < rows_; ++r)
          if (Ops::abs(a(r, col)) > best) {
            best = Ops::abs(a(r, col));
            piv = r;
          }
      }
      if (piv < 0) return Ops::zero();
      if (piv != col) {
        a.swap_rows(piv, col);
        result = Ops::zero() - result;
      }
      result = result * a(col, col);
      S s = Ops::inv(a(col, col));
      for (int r = col + 1; r < rows_; ++r) {
        if (Ops::is_zero(a(r, col))) continue;
        S f = a(r, col) * s;
        a.axpy_row(r, col, f);
      }
    }
    return result;
  }

  friend Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        if (Ops::is_zero(a(i, j))) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return r;
  }

  friend Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
  }
  void scale_row(int r, S s) {
    for (int j = 0; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * s;
  }
  // row r -= f * row src (f by value: callers pass entries of this matrix)
  void axpy_row(int r, int src, S f) {
    for (int j = 0; j < cols_; ++j) (*this)(r, j) -= f * (*this)(src, j);
  }

 private:
  void require_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(std::string("matrix ") + op + ": shape " + std::to_string(rows_) + "x" +
                  std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                  std::to_string(o.cols_));
  }

  int rows_ = 0, cols_ = 0;
  std::vector<S> d_;
};

using ExactMat = Mat<ExactScalar>;
using CMat = Mat<cplx>;

/// Reduced row echelon form in place; returns the rank. Exact arithmetic
/// makes the result canonical, so two row spans are equal iff their RREFs are.
int rref(ExactMat& m);

/// Row space equality via RREF comparison.
bool same_row_space(const ExactMat& a, const ExactMat& b);

/// True if v lies in the row space of basis (rank does not grow).
bool in_row_space(const ExactMat& basis, const std::vector<ExactScalar>& v);

/// Unique exact solution of A x = b for full-column-rank A; nullopt when
/// inconsistent.
std::optional<std::vector<ExactScalar>> solve_exact(const ExactMat& a,
                                                    const std::vector<ExactScalar>& b);

CMat to_cmat(const ExactMat& m);

}  // namespace lie

#endif
