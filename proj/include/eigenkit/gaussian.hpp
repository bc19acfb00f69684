#pragma once

// Gaussian rationals a + b*i.  This is a field: every nonzero element has an
// inverse, which the verification routines rely on when solving for
// proportionality factors.

#include <eigenkit/bigint.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenkit {

struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  GaussianRational() = default;
  GaussianRational(const BigRational& r) : re(r) {}  // NOLINT: implicit by design
  GaussianRational(long r) : re(r) {}                // NOLINT
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }

  // |z|^2 = z * conj(z), always a nonnegative rational.
  BigRational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re + b.re, a.im + b.im);
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re - b.re, a.im - b.im);
  }
  GaussianRational operator-() const { return GaussianRational(-re, -im); }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const BigRational n = b.norm();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    const GaussianRational num = a * b.conj();
    return GaussianRational(num.re / n, num.im / n);
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  // "p/q" for real values, "r/s*i" for purely imaginary, "p/q+r/s*i" mixed.
  std::string str() const {
    if (im == 0) return re.str();
    std::string imag = (im < 0 ? "-" : (re == 0 ? "" : "+"));
    imag += boost::multiprecision::abs(im).str() + "*i";
    if (re == 0) return imag;
    return re.str() + imag;
  }
};

inline std::string to_string(const GaussianRational& z) { return z.str(); }

// Accepts the formats produced by str(): "p/q", "r/s*i", "p/q+r/s*i",
// "p/q-r/s*i" (and "i" / "-i" / "+i" shorthands for the unit).
inline GaussianRational parse_gaussian(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_gaussian: empty string");
  const auto star = s.rfind("*i");
  const bool ends_i = !s.empty() && s.back() == 'i';
  if (!ends_i) return GaussianRational(parse_rational(s));
  std::string head;
  if (star != std::string::npos && star + 2 == s.size()) {
    head = s.substr(0, star);  // everything before "*i"
  } else if (s.size() >= 1 && s.substr(s.size() - 1) == "i") {
    head = s.substr(0, s.size() - 1);  // bare "i" with optional sign prefix
    if (head.empty() || head == "+") head = "1";
    else if (head == "-") head = "-1";
    else if (!head.empty() && (head.back() == '+' || head.back() == '-'))
      head += "1";
  }
  // Split head into real part and imaginary coefficient at the last +/- that
  // is not the leading sign and not inside a fraction.
  std::size_t split = std::string::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if (head[k] == '+' || head[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return GaussianRational(BigRational(0), parse_rational(head));
  }
  const std::string re_part = head.substr(0, split);
  std::string im_part = head.substr(split);
  if (im_part == "+") im_part = "1";
  else if (im_part == "-") im_part = "-1";
  else if (im_part[0] == '+') im_part = im_part.substr(1);
  return GaussianRational(parse_rational(re_part), parse_rational(im_part));
}

}  // namespace eigenkit
