#pragma once

// Polynomial calculus on the unit sphere S^(m-1) in R^m.  Functions on the
// sphere are represented by the unique normal form of a polynomial modulo
// the relation x1^2 = 1 - (x2^2 + ... + xm^2): repeated substitution leaves
// a representative of degree at most 1 in x1, and two polynomials restrict
// to the same function on the sphere exactly when their normal forms match.

#include <eigenkit/multipoly.hpp>

#include <string>
#include <vector>

namespace eigenkit {

class SphereFunction {
 public:
  SphereFunction() = default;

  static SphereFunction zero(unsigned ambient_dim);
  static SphereFunction constant(unsigned ambient_dim, const GaussianRational& c);
  static SphereFunction coordinate(unsigned ambient_dim, unsigned i);

  unsigned ambient_dim() const { return nf_.nvars(); }
  // Intrinsic dimension of the sphere itself.
  unsigned manifold_dim() const { return nf_.nvars() - 1; }
  const MultiPoly& normal_form() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }

  SphereFunction conjugate() const;
  SphereFunction pow(unsigned k) const;

  friend SphereFunction operator+(const SphereFunction& a, const SphereFunction& b);
  friend SphereFunction operator-(const SphereFunction& a, const SphereFunction& b);
  SphereFunction operator-() const;
  friend SphereFunction operator*(const SphereFunction& a, const SphereFunction& b);
  friend SphereFunction operator*(const GaussianRational& s, const SphereFunction& f);
  friend SphereFunction operator*(const SphereFunction& f, const GaussianRational& s);
  friend bool operator==(const SphereFunction& a, const SphereFunction& b) {
    return a.nf_ == b.nf_;
  }

  SphereFunction& operator+=(const SphereFunction& o) { return *this = *this + o; }
  SphereFunction& operator-=(const SphereFunction& o) { return *this = *this - o; }
  SphereFunction& operator*=(const SphereFunction& o) { return *this = *this * o; }

  std::string str() const { return nf_.str(); }

  friend SphereFunction reduce_mod_sphere(const MultiPoly& p);

 private:
  explicit SphereFunction(MultiPoly nf) : nf_(std::move(nf)) {}
  MultiPoly nf_;  // invariant: degree in x1 at most 1
};

// Canonical representative of p restricted to the sphere.  Requires at least
// two ambient variables (with one variable the quadric degenerates).
SphereFunction reduce_mod_sphere(const MultiPoly& p);

// Spherical Laplacian: acts on the restriction of a homogeneous degree-d
// polynomial q as (ambient Laplacian of q) - d(d+m-2) q, extended over
// homogeneous components of the normal form.
SphereFunction sphere_laplacian(const SphereFunction& f);

// Carre du champ on the sphere: for representatives P, Q, the restriction of
// <grad P, grad Q> - (EP)(EQ) with E the Euler operator.  Independent of the
// representatives chosen.
SphereFunction sphere_kappa(const SphereFunction& f, const SphereFunction& g);

// Integral over the sphere with normalized total mass 1.  Monomial rule:
// zero if any exponent is odd, otherwise
//   prod_i (e_i - 1)!! / (m (m+2) ... (m + |e| - 2)).
GaussianRational sphere_integrate(const SphereFunction& f);
BigRational sphere_integrate_monomial(unsigned ambient_dim, const Monomial& e);

// Leading harmonic part of a homogeneous polynomial: the unique harmonic H
// with p = H + |x|^2 q, deg q = deg p - 2.
MultiPoly harmonic_component(const MultiPoly& p);

// Built-in example families on spheres.
//
// coordinates(n): the n complex coordinate functions z_j = x_(2j-1) + i x_(2j)
// restricted to S^(2n-1).
std::vector<SphereFunction> example_coordinates(unsigned n);

// s7(a,b,c,d): the cubic with complex parameters a,b,c,d on S^7, built from
// z = x1+ix2, u = x3+ix4, w = x5+ix6, v = x7+ix8 as
//   a (z^2 w + z u conj(v)) + b (z u conj(w) - z^2 v)
// + c (u^2 conj(v) + z u w) + d (u^2 conj(w) - z u v).
MultiPoly s7_ambient_polynomial(const GaussianRational& a, const GaussianRational& b,
                                const GaussianRational& c, const GaussianRational& d);
SphereFunction example_s7(const GaussianRational& a, const GaussianRational& b,
                          const GaussianRational& c, const GaussianRational& d);

}  // namespace eigenkit
