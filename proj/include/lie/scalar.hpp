#ifndef LIE_SCALAR_HPP
#define LIE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

/// Thrown on precondition violations; the message names the offending operands.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& r);        // "p" or "p/q", q > 0, reduced
Rat rat_parse(std::string_view s);

/// Gaussian rational a + b*i. cpp_rational keeps each part reduced with a
/// positive denominator, so values are always canonical.
struct ExactScalar {
  Rat re{0};
  Rat im{0};

  ExactScalar() = default;
  ExactScalar(int n) : re(n) {}
  ExactScalar(long n) : re(n) {}
  ExactScalar(Rat r) : re(std::move(r)) {}
  ExactScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static ExactScalar i() { return {Rat(0), Rat(1)}; }
  static ExactScalar of(long num, long den) { return {Rat(num, den)}; }
  static ExactScalar imag(long num, long den) { return {Rat(0), Rat(num, den)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactScalar conj() const { return {re, -im}; }

  /// 1/z for z != 0.
  ExactScalar inverse() const {
    if (is_zero()) throw Error("ExactScalar: inverse of zero");
    Rat n = re * re + im * im;
    return {re / n, -im / n};
  }

  ExactScalar operator-() const { return {-re, -im}; }

  ExactScalar& operator+=(const ExactScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    // branch on real factors: structure constants and ladder entries are
    // mostly purely real or purely imaginary
    if (a.im == 0) {
      if (b.im == 0) return {a.re * b.re, Rat(0)};
      return {a.re * b.re, a.re * b.im};
    }
    if (b.im == 0) return {a.re * b.re, a.im * b.re};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  cplx to_cplx() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  double abs_approx() const { return std::abs(to_cplx()); }

  /// "0", "3/2", "i·1", "-i·2/3", "1/2+i·3/4", "1/2-i·3/4"
  std::string str() const;
  static ExactScalar parse(std::string_view s);
};

/// Complex doubles rendered in the same "re±i·im" grammar, 17 significant
/// digits, so serialized output is byte-stable.
std::string cplx_str(const cplx& z);
cplx cplx_parse(std::string_view s);

}  // namespace lie

#endif
