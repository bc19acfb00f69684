#pragma once

// Univariate polynomials with BigInt coefficients.  Coefficient vector is
// kept trimmed, so the zero polynomial is the empty vector and equality is
// vector equality.

#include <eigenkit/bigint.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eigenkit {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
  static IntPoly x() { return IntPoly(std::vector<BigInt>{BigInt(0), BigInt(1)}); }

  // (1 + x)^n and (1 - x)^n via the binomial theorem.
  static IntPoly one_plus_x_pow(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned long k = 0; k <= n; ++k) c[k] = binomial(n, static_cast<long>(k));
    return IntPoly(std::move(c));
  }
  static IntPoly one_minus_x_pow(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
      c[k] = binomial(n, static_cast<long>(k));
      if (k % 2 == 1) c[k] = -c[k];
    }
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return IntPoly(std::move(out));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return IntPoly(std::move(out));
  }
  IntPoly operator-() const {
    std::vector<BigInt> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
    std::vector<BigInt> out(p.c_.size());
    for (std::size_t k = 0; k < p.c_.size(); ++k) out[k] = s * p.c_[k];
    return IntPoly(std::move(out));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = BigInt(k) * c_[k];
    return IntPoly(std::move(out));
  }

  IntPoly nth_derivative(unsigned k) const {
    IntPoly p = *this;
    for (unsigned i = 0; i < k; ++i) p = p.derivative();
    return p;
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }
  BigInt eval_one() const {
    BigInt acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const bool neg = c_[k] < 0;
      const BigInt mag = neg ? BigInt(-c_[k]) : c_[k];
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

}  // namespace eigenkit
