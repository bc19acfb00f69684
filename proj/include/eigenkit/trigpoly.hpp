#pragma once

// Finite linear combinations of the characters e_k(x) = exp(2*pi*i <k, x>)
// of a flat torus R^n / lattice, with PiScalar coefficients.  Frequencies k
// range over the dual lattice and are stored as integer coordinate vectors
// in the dual basis.  Laplacian and carre du champ pick up factors of
// 4*pi^2 <k, l>, which stay exact as PiScalar values.

#include <eigenkit/lattice.hpp>
#include <eigenkit/pi_scalar.hpp>

#include <map>
#include <string>
#include <vector>

namespace eigenkit {

using FreqVector = std::vector<long>;

class TrigPoly {
 public:
  explicit TrigPoly(Lattice torus) : torus_(std::move(torus)) {}

  static TrigPoly character(const Lattice& torus, FreqVector k);
  static TrigPoly constant(const Lattice& torus, const PiScalar& c);

  const Lattice& torus() const { return torus_; }
  unsigned dim() const { return torus_.dim(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<FreqVector, PiScalar>& terms() const { return terms_; }
  PiScalar coeff(const FreqVector& k) const;

  // <k, l> in the dual lattice, both vectors in dual-basis coordinates.
  BigRational freq_inner(const FreqVector& k, const FreqVector& l) const;

  TrigPoly conjugate() const;  // conj(c) on coefficients, k -> -k
  TrigPoly pow(unsigned k) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  TrigPoly operator-() const;
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const PiScalar& s, const TrigPoly& f);
  friend TrigPoly operator*(const TrigPoly& f, const PiScalar& s);
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.torus_ == b.torus_ && a.terms_ == b.terms_;
  }

  TrigPoly& operator+=(const TrigPoly& o) { return *this = *this + o; }
  TrigPoly& operator-=(const TrigPoly& o) { return *this = *this - o; }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  void add_term(FreqVector k, const PiScalar& c);

  std::string str() const;

 private:
  void check_compatible(const TrigPoly& o) const;

  Lattice torus_;
  std::map<FreqVector, PiScalar> terms_;  // no zero coefficients
};

// Laplacian: e_k is an eigenfunction with eigenvalue -PI2 <k, k>.
TrigPoly trig_laplacian(const TrigPoly& f);

// Carre du champ: kappa(e_k, e_l) = -PI2 <k, l> e_(k+l), extended bilinearly.
TrigPoly trig_kappa(const TrigPoly& f, const TrigPoly& g);

// Mean value over the torus: the coefficient of e_0.
PiScalar trig_integrate(const TrigPoly& f);

}  // namespace eigenkit
