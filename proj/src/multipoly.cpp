#include <eigenkit/multipoly.hpp>

namespace eigenkit {

MultiPoly ambient_laplacian(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (unsigned i = 0; i < p.nvars(); ++i) out += p.derivative(i).derivative(i);
  return out;
}

MultiPoly euler_operator(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (d == 0) continue;
    out.add_term(e, c * GaussianRational(BigRational(d)));
  }
  return out;
}

MultiPoly gradient_inner(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars())
    throw std::invalid_argument("gradient_inner: variable count mismatch");
  MultiPoly out(p.nvars());
  for (unsigned i = 0; i < p.nvars(); ++i) out += p.derivative(i) * q.derivative(i);
  return out;
}

MultiPoly radius_squared(unsigned nvars) {
  MultiPoly out(nvars);
  for (unsigned i = 0; i < nvars; ++i) {
    Monomial e(nvars, 0);
    e[i] = 2;
    out.add_term(std::move(e), GaussianRational(1));
  }
  return out;
}

}  // namespace eigenkit
