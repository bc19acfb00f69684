#pragma once

// Scalars of the form c0 + c1*PI2 + c2*PI2^2 + ... where PI2 stands for
// 4*pi^2 and the coefficients are Gaussian rationals.  Since pi^2 is
// transcendental, two such expressions are equal exactly when their
// coefficient vectors agree, so equality and arithmetic stay exact.  This is
// a commutative ring, not a field: division is partial (see try_divide).

#include <eigenkit/gaussian.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eigenkit {

class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(const BigRational& r) { c_.emplace_back(r); trim(); }      // NOLINT
  PiScalar(long r) { c_.emplace_back(BigRational(r)); trim(); }       // NOLINT
  PiScalar(const GaussianRational& z) { c_.push_back(z); trim(); }    // NOLINT
  explicit PiScalar(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // The distinguished symbol PI2 = 4*pi^2 itself.
  static PiScalar pi2() {
    return PiScalar(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)});
  }

  bool is_zero() const { return c_.empty(); }
  // Degree in PI2; -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  GaussianRational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational();
  }

  bool is_gaussian() const { return c_.size() <= 1; }
  std::optional<GaussianRational> as_gaussian() const {
    if (!is_gaussian()) return std::nullopt;
    return coeff(0);
  }
  std::optional<BigRational> as_rational() const {
    if (!is_gaussian() || !coeff(0).is_real()) return std::nullopt;
    return coeff(0).re;
  }

  PiScalar conj() const {
    std::vector<GaussianRational> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].conj();
    return PiScalar(std::move(out));
  }

  bool is_real() const {
    for (const auto& z : c_)
      if (!z.is_real()) return false;
    return true;
  }

  friend PiScalar operator+(const PiScalar& a, const PiScalar& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return PiScalar(std::move(out));
  }
  friend PiScalar operator-(const PiScalar& a, const PiScalar& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return PiScalar(std::move(out));
  }
  PiScalar operator-() const {
    std::vector<GaussianRational> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
    return PiScalar(std::move(out));
  }
  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    if (a.is_zero() || b.is_zero()) return PiScalar();
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PiScalar(std::move(out));
  }

  PiScalar& operator+=(const PiScalar& o) { return *this = *this + o; }
  PiScalar& operator-=(const PiScalar& o) { return *this = *this - o; }
  PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

  friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.c_ == b.c_; }

  // Exact quotient a / b when it exists in the ring (polynomial division in
  // PI2 with zero remainder); nullopt otherwise.
  friend std::optional<PiScalar> try_divide(const PiScalar& a, const PiScalar& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return PiScalar();
    if (a.c_.size() < b.c_.size()) return std::nullopt;
    std::vector<GaussianRational> rem = a.c_;
    const GaussianRational lead = b.c_.back();
    std::vector<GaussianRational> quot(a.c_.size() - b.c_.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const GaussianRational q = rem[k + b.c_.size() - 1] / lead;
      quot[k] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    for (const auto& r : rem)
      if (!r.is_zero()) return std::nullopt;
    return PiScalar(std::move(quot));
  }

  // "0", "c0", "c1*PI2", "c0 + c1*PI2", coefficients rendered like
  // GaussianRational::str().  Negative coefficients print as "- |c|*...".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      std::string coeff = c_[k].str();
      bool negated = false;
      if (c_[k].is_real() && c_[k].re < 0) {
        coeff = (-c_[k]).str();
        negated = true;
      } else if (!c_[k].is_real()) {
        coeff = "(" + coeff + ")";
      }
      if (out.empty()) {
        if (negated) out += "-";
      } else {
        out += negated ? " - " : " + ";
      }
      if (k == 0) {
        out += coeff;
      } else {
        if (coeff != "1") out += coeff + "*";
        out += "PI2";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussianRational> c_;  // c_[k] multiplies PI2^k; back() != 0
};

inline std::string to_string(const PiScalar& s) { return s.str(); }

// Rational bracket 39.478417604 < PI2 < 39.478417605, wide enough to be
// unconditionally true and tight enough to separate every value this
// project needs to order.
inline const BigRational& pi2_lower_bound() {
  static const BigRational lo = BigRational(BigInt("39478417604")) / BigRational(BigInt("1000000000"));
  return lo;
}
inline const BigRational& pi2_upper_bound() {
  static const BigRational hi = BigRational(BigInt("39478417605")) / BigRational(BigInt("1000000000"));
  return hi;
}

// Sign of a real PiScalar of degree <= 1, when the rational bracket for PI2
// decides it; nullopt for higher degree, non-real values, or a bracket miss.
inline std::optional<int> sign_if_decidable(const PiScalar& s) {
  if (!s.is_real()) return std::nullopt;
  if (s.is_zero()) return 0;
  if (s.degree() > 1) return std::nullopt;
  const BigRational a0 = s.coeff(0).re;
  const BigRational a1 = s.coeff(1).re;
  if (a1 == 0) return a0 > 0 ? 1 : -1;
  // a0 + a1*PI2 changes sign at PI2 = -a0/a1; compare the bracket to the root.
  const BigRational root = -a0 / a1;
  if (a1 > 0) {
    if (pi2_lower_bound() > root) return 1;
    if (pi2_upper_bound() < root) return -1;
    return std::nullopt;
  }
  if (pi2_lower_bound() > root) return -1;
  if (pi2_upper_bound() < root) return 1;
  return std::nullopt;
}

}  // namespace eigenkit
