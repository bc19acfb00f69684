#pragma once

// Multivariate polynomials over the Gaussian rationals, in a fixed number of
// real variables x1..xm.  Terms live in an ordered map keyed by exponent
// vector, so iteration order (and hence printing) is deterministic and zero
// coefficients are never stored.

#include <eigenkit/gaussian.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenkit {

using Monomial = std::vector<unsigned>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

  static MultiPoly constant(unsigned nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    Monomial e(nvars, 0);
    e[i] = 1;
    p.add_term(e, GaussianRational(1));
    return p;
  }
  static MultiPoly monomial(unsigned nvars, Monomial e, const GaussianRational& c) {
    if (e.size() != nvars) throw std::invalid_argument("MultiPoly::monomial: bad exponent size");
    MultiPoly p(nvars);
    p.add_term(std::move(e), c);
    return p;
  }

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  GaussianRational coeff(const Monomial& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  // Highest total degree among terms; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned x : e) s += static_cast<int>(x);
      if (s > d) d = s;
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned x : e) s += static_cast<int>(x);
      if (d < 0) d = s;
      else if (s != d) return false;
    }
    return true;
  }

  MultiPoly homogeneous_component(unsigned d) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      if (s == d) out.add_term(e, c);
    }
    return out;
  }

  // Nonzero components keyed by degree.
  std::map<unsigned, MultiPoly> homogeneous_components() const {
    std::map<unsigned, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      auto [it, fresh] = out.try_emplace(s, nvars_);
      it->second.add_term(e, c);
    }
    return out;
  }

  MultiPoly derivative(unsigned i) const {
    if (i >= nvars_) throw std::invalid_argument("MultiPoly::derivative: index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Monomial d = e;
      d[i] -= 1;
      out.add_term(std::move(d), c * GaussianRational(BigRational(e[i])));
    }
    return out;
  }

  MultiPoly conjugate() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.conj());
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Monomial e(a.nvars_);
        for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  friend MultiPoly operator*(const GaussianRational& s, const MultiPoly& p) {
    MultiPoly out(p.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& p, const GaussianRational& s) { return s * p; }

  MultiPoly pow(unsigned k) const {
    MultiPoly acc = constant(nvars_, GaussianRational(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1U) acc = acc * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void add_term(Monomial e, const GaussianRational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: bad exponent size");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (unsigned i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const std::string cs = c.str();
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else if (cs == "-1") {
        out += "-" + mono;
      } else if (c.is_real() || c.re == 0) {
        out += cs + "*" + mono;
      } else {
        out += "(" + cs + ")*" + mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("MultiPoly: mixing polynomials in different variable counts");
  }

  unsigned nvars_ = 0;
  std::map<Monomial, GaussianRational> terms_;
};

// Sum of second partials.
MultiPoly ambient_laplacian(const MultiPoly& p);
// Euler vector field sum_i x_i d/dx_i (multiplies each homogeneous degree-d
// piece by d).
MultiPoly euler_operator(const MultiPoly& p);
// sum_i (dp/dx_i)(dq/dx_i).
MultiPoly gradient_inner(const MultiPoly& p, const MultiPoly& q);
// x1^2 + ... + xm^2.
MultiPoly radius_squared(unsigned nvars);

}  // namespace eigenkit
