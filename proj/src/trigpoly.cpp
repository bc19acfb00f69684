#include <eigenkit/trigpoly.hpp>

#include <stdexcept>

namespace eigenkit {

TrigPoly TrigPoly::character(const Lattice& torus, FreqVector k) {
  if (k.size() != torus.dim())
    throw std::invalid_argument("TrigPoly::character: frequency dimension mismatch");
  TrigPoly f(torus);
  f.add_term(std::move(k), PiScalar(1));
  return f;
}

TrigPoly TrigPoly::constant(const Lattice& torus, const PiScalar& c) {
  TrigPoly f(torus);
  f.add_term(FreqVector(torus.dim(), 0), c);
  return f;
}

PiScalar TrigPoly::coeff(const FreqVector& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? PiScalar() : it->second;
}

BigRational TrigPoly::freq_inner(const FreqVector& k, const FreqVector& l) const {
  const unsigned n = dim();
  if (k.size() != n || l.size() != n)
    throw std::invalid_argument("TrigPoly::freq_inner: dimension mismatch");
  // Frequencies live in the dual lattice, whose Gram matrix is dual_gram.
  BigRational acc(0);
  for (unsigned i = 0; i < n; ++i) {
    if (k[i] == 0) continue;
    BigRational partial(0);
    for (unsigned j = 0; j < n; ++j) {
      if (l[j] == 0) continue;
      partial += torus_.dual_gram().at(i, j) * BigRational(l[j]);
    }
    acc += BigRational(k[i]) * partial;
  }
  return acc;
}

void TrigPoly::add_term(FreqVector k, const PiScalar& c) {
  if (k.size() != dim()) throw std::invalid_argument("TrigPoly::add_term: dimension mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TrigPoly::check_compatible(const TrigPoly& o) const {
  if (!(torus_ == o.torus_))
    throw std::invalid_argument("TrigPoly: mixing functions on different tori");
}

TrigPoly TrigPoly::conjugate() const {
  TrigPoly out(torus_);
  for (const auto& [k, c] : terms_) {
    FreqVector neg(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
    out.add_term(std::move(neg), c.conj());
  }
  return out;
}

TrigPoly TrigPoly::pow(unsigned k) const {
  TrigPoly acc = constant(torus_, PiScalar(1));
  TrigPoly base = *this;
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return acc;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  a.check_compatible(b);
  TrigPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  a.check_compatible(b);
  TrigPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly out(torus_);
  for (const auto& [k, c] : terms_) out.add_term(k, -c);
  return out;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  a.check_compatible(b);
  TrigPoly out(a.torus_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      FreqVector sum(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) sum[i] = ka[i] + kb[i];
      out.add_term(std::move(sum), ca * cb);
    }
  }
  return out;
}

TrigPoly operator*(const PiScalar& s, const TrigPoly& f) {
  TrigPoly out(f.torus_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : f.terms_) out.add_term(k, s * c);
  return out;
}

TrigPoly operator*(const TrigPoly& f, const PiScalar& s) { return s * f; }

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string freq = "e(";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) freq += ",";
      freq += std::to_string(k[i]);
    }
    freq += ")";
    const std::string cs = c.str();
    out += (cs == "1") ? freq : "(" + cs + ")*" + freq;
  }
  return out;
}

TrigPoly trig_laplacian(const TrigPoly& f) {
  TrigPoly out(f.torus());
  for (const auto& [k, c] : f.terms()) {
    const BigRational q = f.freq_inner(k, k);
    out.add_term(k, PiScalar(GaussianRational(-q)) * PiScalar::pi2() * c);
  }
  return out;
}

TrigPoly trig_kappa(const TrigPoly& f, const TrigPoly& g) {
  if (!(f.torus() == g.torus()))
    throw std::invalid_argument("trig_kappa: mixing functions on different tori");
  TrigPoly out(f.torus());
  for (const auto& [k, ck] : f.terms()) {
    for (const auto& [l, cl] : g.terms()) {
      const BigRational q = f.freq_inner(k, l);
      if (q == 0) continue;
      FreqVector sum(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) sum[i] = k[i] + l[i];
      out.add_term(std::move(sum), PiScalar(GaussianRational(-q)) * PiScalar::pi2() * ck * cl);
    }
  }
  return out;
}

PiScalar trig_integrate(const TrigPoly& f) { return f.coeff(FreqVector(f.dim(), 0)); }

}  // namespace eigenkit
