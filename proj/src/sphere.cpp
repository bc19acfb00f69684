#include <eigenkit/sphere.hpp>

#include <stdexcept>

namespace eigenkit {

namespace {

// 1 - (x2^2 + ... + xm^2), the replacement for x1^2 on the sphere.
MultiPoly x1_squared_substitute(unsigned m) {
  MultiPoly rest = MultiPoly::constant(m, GaussianRational(1));
  for (unsigned i = 1; i < m; ++i) {
    Monomial e(m, 0);
    e[i] = 2;
    rest.add_term(std::move(e), GaussianRational(BigRational(-1)));
  }
  return rest;
}

MultiPoly reduce_poly(const MultiPoly& p) {
  const unsigned m = p.nvars();
  const MultiPoly rest = x1_squared_substitute(m);
  // rest contains no x1, so x1^(2q+r) -> x1^r * rest^q finishes in one pass.
  std::vector<MultiPoly> rest_pow{MultiPoly::constant(m, GaussianRational(1))};
  MultiPoly out(m);
  for (const auto& [e, c] : p.terms()) {
    const unsigned q = e[0] / 2;
    const unsigned r = e[0] % 2;
    while (rest_pow.size() <= q) rest_pow.push_back(rest_pow.back() * rest);
    Monomial base = e;
    base[0] = r;
    out += MultiPoly::monomial(m, std::move(base), c) * rest_pow[q];
  }
  return out;
}

}  // namespace

SphereFunction reduce_mod_sphere(const MultiPoly& p) {
  if (p.nvars() < 2)
    throw std::invalid_argument("reduce_mod_sphere: need at least two ambient variables");
  return SphereFunction(reduce_poly(p));
}

SphereFunction SphereFunction::zero(unsigned ambient_dim) {
  return reduce_mod_sphere(MultiPoly(ambient_dim));
}

SphereFunction SphereFunction::constant(unsigned ambient_dim, const GaussianRational& c) {
  return reduce_mod_sphere(MultiPoly::constant(ambient_dim, c));
}

SphereFunction SphereFunction::coordinate(unsigned ambient_dim, unsigned i) {
  return reduce_mod_sphere(MultiPoly::variable(ambient_dim, i));
}

SphereFunction SphereFunction::conjugate() const { return SphereFunction(nf_.conjugate()); }

SphereFunction SphereFunction::pow(unsigned k) const {
  SphereFunction acc = constant(ambient_dim(), GaussianRational(1));
  SphereFunction base = *this;
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return acc;
}

SphereFunction operator+(const SphereFunction& a, const SphereFunction& b) {
  return SphereFunction(a.nf_ + b.nf_);  // normal forms are closed under +
}
SphereFunction operator-(const SphereFunction& a, const SphereFunction& b) {
  return SphereFunction(a.nf_ - b.nf_);
}
SphereFunction SphereFunction::operator-() const { return SphereFunction(-nf_); }
SphereFunction operator*(const SphereFunction& a, const SphereFunction& b) {
  return reduce_mod_sphere(a.nf_ * b.nf_);  // product may reintroduce x1^2
}
SphereFunction operator*(const GaussianRational& s, const SphereFunction& f) {
  return SphereFunction(s * f.nf_);
}
SphereFunction operator*(const SphereFunction& f, const GaussianRational& s) { return s * f; }

SphereFunction sphere_laplacian(const SphereFunction& f) {
  const unsigned m = f.ambient_dim();
  MultiPoly acc(m);
  for (const auto& [d, pd] : f.normal_form().homogeneous_components()) {
    // pd is a normal form already; the ambient Laplacian cannot raise the
    // x1-degree, but reduce once more for safety (reduction is idempotent).
    acc += reduce_poly(ambient_laplacian(pd));
    const BigRational c(static_cast<long>(d) * (static_cast<long>(d) + m - 2));
    acc -= GaussianRational(c) * pd;
  }
  return reduce_mod_sphere(acc);
}

SphereFunction sphere_kappa(const SphereFunction& f, const SphereFunction& g) {
  if (f.ambient_dim() != g.ambient_dim())
    throw std::invalid_argument("sphere_kappa: ambient dimension mismatch");
  const MultiPoly& p = f.normal_form();
  const MultiPoly& q = g.normal_form();
  return reduce_mod_sphere(gradient_inner(p, q) - euler_operator(p) * euler_operator(q));
}

BigRational sphere_integrate_monomial(unsigned ambient_dim, const Monomial& e) {
  if (e.size() != ambient_dim)
    throw std::invalid_argument("sphere_integrate_monomial: bad exponent size");
  unsigned long total = 0;
  for (unsigned x : e) {
    if (x % 2 == 1) return BigRational(0);
    total += x;
  }
  BigInt num(1);
  for (unsigned x : e) num *= odd_double_factorial(x);
  BigInt den(1);
  for (unsigned long j = 0; 2 * j < total; ++j) den *= BigInt(ambient_dim + 2 * j);
  return BigRational(num) / BigRational(den);
}

GaussianRational sphere_integrate(const SphereFunction& f) {
  // The normal form has x1-degree <= 1; terms with x1 present integrate to 0
  // and the rest are plain monomials in x2..xm.
  GaussianRational acc;
  const unsigned m = f.ambient_dim();
  for (const auto& [e, c] : f.normal_form().terms()) {
    const BigRational i = sphere_integrate_monomial(m, e);
    if (i != 0) acc += c * GaussianRational(i);
  }
  return acc;
}

namespace {

// Layers of the harmonic decomposition p = sum_k |x|^(2k) h_k with each h_k
// harmonic of degree d - 2k.  The Laplacian sends the k-th layer to
// mu_k |x|^(2(k-1)) h_k with mu_k = 2k(2d - 2k + m - 2), which is nonzero
// whenever the layer can be (d >= 2k), so the layers of lap(p) determine
// h_1, h_2, ... and h_0 is whatever remains.
std::vector<MultiPoly> harmonic_layers(const MultiPoly& p) {
  const unsigned m = p.nvars();
  const int d = p.total_degree();
  const MultiPoly lap = ambient_laplacian(p);
  if (d <= 1 || lap.is_zero()) return {p};
  const std::vector<MultiPoly> sub = harmonic_layers(lap);
  std::vector<MultiPoly> layers(sub.size() + 1, MultiPoly(m));
  const MultiPoly r2 = radius_squared(m);
  MultiPoly rest(m);
  MultiPoly r2k = r2;
  for (std::size_t k = 1; k <= sub.size(); ++k) {
    const long mu = 2L * static_cast<long>(k) * (2L * d - 2L * static_cast<long>(k) + m - 2);
    layers[k] = GaussianRational(BigRational(1) / BigRational(mu)) * sub[k - 1];
    rest += r2k * layers[k];
    if (k < sub.size()) r2k = r2k * r2;
  }
  layers[0] = p - rest;
  return layers;
}

}  // namespace

MultiPoly harmonic_component(const MultiPoly& p) {
  if (!p.is_homogeneous())
    throw std::invalid_argument("harmonic_component: polynomial must be homogeneous");
  if (p.is_zero()) return p;
  return harmonic_layers(p)[0];
}

std::vector<SphereFunction> example_coordinates(unsigned n) {
  if (n < 1) throw std::invalid_argument("example_coordinates: need n >= 1");
  const unsigned m = 2 * n;
  std::vector<SphereFunction> out;
  out.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    MultiPoly z = MultiPoly::variable(m, 2 * j) +
                  GaussianRational::i() * MultiPoly::variable(m, 2 * j + 1);
    out.push_back(reduce_mod_sphere(z));
  }
  return out;
}

MultiPoly s7_ambient_polynomial(const GaussianRational& a, const GaussianRational& b,
                                const GaussianRational& c, const GaussianRational& d) {
  const unsigned m = 8;
  const auto cvar = [&](unsigned j) {  // j = 0..3 -> z, u, w, v
    return MultiPoly::variable(m, 2 * j) +
           GaussianRational::i() * MultiPoly::variable(m, 2 * j + 1);
  };
  const MultiPoly z = cvar(0), u = cvar(1), w = cvar(2), v = cvar(3);
  const MultiPoly wb = w.conjugate(), vb = v.conjugate();
  return a * (z * z * w + z * u * vb) + b * (z * u * wb - z * z * v) +
         c * (u * u * vb + z * u * w) + d * (u * u * wb - z * u * v);
}

SphereFunction example_s7(const GaussianRational& a, const GaussianRational& b,
                          const GaussianRational& c, const GaussianRational& d) {
  return reduce_mod_sphere(s7_ambient_polynomial(a, b, c, d));
}

}  // namespace eigenkit
