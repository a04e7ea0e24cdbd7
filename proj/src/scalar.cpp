#include "lie/scalar.hpp"

#include <cstdio>
#include <cstdlib>

namespace lie {

namespace {

constexpr std::string_view kImagMark = "i\xc2\xb7";  // "i·"

bool is_int_token(std::string_view s) {
  if (s.empty()) return false;
  size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

std::string fmt17(double x) {
  if (x == 0.0) return "0";  // normalizes -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string rat_str(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int_token(s)) throw Error("rational parse: bad token '" + std::string(s) + "'");
    return Rat(Int(std::string(s)));
  }
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den) || den[0] == '-')
    throw Error("rational parse: bad token '" + std::string(s) + "'");
  Int d{std::string(den)};
  if (d == 0) throw Error("rational parse: zero denominator in '" + std::string(s) + "'");
  return Rat(Int(std::string(num)), d);
}

std::string ExactScalar::str() const {
  if (im == 0) return rat_str(re);
  std::string imag = std::string(kImagMark) + rat_str(im < 0 ? Rat(-im) : im);
  if (im < 0) imag = "-" + imag;
  if (re == 0) return imag;
  if (im < 0) return rat_str(re) + imag;
  return rat_str(re) + "+" + imag;
}

namespace {

// splits the shared "re±i·im" grammar into its two atoms
void parse_complex(std::string_view s, std::string& re_out, std::string& im_out, bool& im_neg) {
  auto pos = s.find(kImagMark);
  if (pos == std::string_view::npos) {
    re_out = std::string(s);
    im_out.clear();
    im_neg = false;
    return;
  }
  std::string_view rest = s.substr(pos + kImagMark.size());
  if (pos == 0) {
    re_out.clear();
    im_out = std::string(rest);
    im_neg = false;
  } else if (pos == 1 && (s[0] == '-' || s[0] == '+')) {
    re_out.clear();
    im_out = std::string(rest);
    im_neg = s[0] == '-';
  } else {
    char sign = s[pos - 1];
    if (sign != '+' && sign != '-')
      throw Error("complex parse: expected sign before i· in '" + std::string(s) + "'");
    re_out = std::string(s.substr(0, pos - 1));
    im_out = std::string(rest);
    im_neg = sign == '-';
  }
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view s) {
  std::string re_s, im_s;
  bool neg = false;
  parse_complex(s, re_s, im_s, neg);
  ExactScalar out;
  if (!re_s.empty()) out.re = rat_parse(re_s);
  if (!im_s.empty()) {
    out.im = rat_parse(im_s);
    if (neg) out.im = -out.im;
  }
  return out;
}

std::string cplx_str(const cplx& z) {
  if (z.imag() == 0.0) return fmt17(z.real());
  std::string imag = std::string(kImagMark) + fmt17(std::abs(z.imag()));
  bool neg = z.imag() < 0.0;
  if (z.real() == 0.0) return neg ? "-" + imag : imag;
  return fmt17(z.real()) + (neg ? "-" : "+") + imag;
}

cplx cplx_parse(std::string_view s) {
  std::string re_s, im_s;
  bool neg = false;
  parse_complex(s, re_s, im_s, neg);
  auto to_d = [&](const std::string& t) {
    if (t.empty()) return 0.0;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == nullptr || *end != '\0')
      throw Error("complex parse: bad float '" + t + "' in '" + std::string(s) + "'");
    return v;
  };
  double re = to_d(re_s);
  double im = to_d(im_s);
  return {re, neg ? -im : im};
}

}  // namespace lie
