#include <eigenkit/verify.hpp>

#include <eigenkit/torus.hpp>

namespace eigenkit::verify {

std::optional<bool> lambda_mu_order_ok(const GaussianRational& lambda,
                                       const GaussianRational& mu) {
  if (!lambda.is_real() || !mu.is_real()) return std::nullopt;
  return lambda.re <= mu.re && mu.re < 0;
}

std::optional<bool> lambda_mu_order_ok(const PiScalar& lambda, const PiScalar& mu) {
  const auto mu_sign = sign_if_decidable(mu);
  const auto gap_sign = sign_if_decidable(mu - lambda);
  if (!mu_sign || !gap_sign) return std::nullopt;
  return *mu_sign < 0 && *gap_sign >= 0;
}

VerificationReport check_spectrum_condition(const PiScalar& lambda, const PiScalar& mu,
                                            const Lattice& torus, unsigned d_max) {
  VerificationReport r;
  r.task = "torus spectrum condition d<=" + std::to_string(d_max);
  const Lattice dual = dual_lattice(torus);
  for (unsigned d = 1; d <= d_max; ++d) {
    const PiScalar nu = power_eigenvalue(d, lambda, mu);
    const std::string id = "power d=" + std::to_string(d);
    // nu must be -q PI2 with q a rational realized as a dual norm.
    if (nu.degree() > 1 || !nu.coeff(0).is_zero() || !nu.coeff(1).is_real()) {
      r.add(id, "-q*PI2 with q in the dual norm set", nu.str() + " (wrong form)", false);
      continue;
    }
    const BigRational q = -nu.coeff(1).re;
    if (q < 0) {
      r.add(id, "q >= 0", "q = " + q.str(), false);
      continue;
    }
    const auto shell = norm_shell(dual, q);
    r.add(id, "q = " + q.str() + " realized",
          shell.empty() ? "q = " + q.str() + " not a dual norm"
                        : "realized with multiplicity " + std::to_string(shell.size()),
          !shell.empty());
  }
  return r;
}

QuadExt::QuadExt(BigRational rational, BigRational surd, unsigned long radicand)
    : a(std::move(rational)), b(std::move(surd)), n(radicand) {
  if (b == 0) {
    n = 0;
    return;
  }
  // Fold perfect-square radicands into the rational part.
  const BigInt root = isqrt_floor(BigInt(n));
  if (root * root == BigInt(n)) {
    a += b * BigRational(root);
    b = 0;
    n = 0;
  }
}

std::string QuadExt::str() const {
  if (b == 0) return a.str();
  std::string tail = b.str() + "*sqrt(" + std::to_string(n) + ")";
  if (a == 0) return tail;
  return b > 0 ? a.str() + "+" + tail : a.str() + tail;
}

namespace {

unsigned long common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b == 0) return y.n;
  if (y.b == 0) return x.n;
  if (x.n != y.n) throw std::invalid_argument("QuadExt: mixing different radicands");
  return x.n;
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a + y.a, x.b + y.b, common_radicand(x, y));
}
QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a - y.a, x.b - y.b, common_radicand(x, y));
}
QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const unsigned long n = common_radicand(x, y);
  return QuadExt(x.a * y.a + x.b * y.b * BigRational(static_cast<long>(n)),
                 x.a * y.b + x.b * y.a, n);
}
QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  const unsigned long n = common_radicand(x, y);
  const BigRational denom = y.a * y.a - y.b * y.b * BigRational(static_cast<long>(n));
  if (denom == 0) throw std::domain_error("QuadExt: division by zero");
  const QuadExt conj(y.a, -y.b, y.n);
  const QuadExt num = x * conj;
  return QuadExt(num.a / denom, num.b / denom, n);
}

ConeParams cone_parameters(const BigRational& lambda, const BigRational& mu, unsigned m) {
  if (m < 1) throw std::invalid_argument("cone_parameters: manifold dimension must be >= 1");
  ConeParams out;
  out.manifold_dim = m;
  out.lambda = lambda;
  out.mu = mu;
  if (lambda == mu || mu == 0) {
    out.conical = false;  // the inversion needs lambda != mu and mu != 0
    return out;
  }
  const BigRational m1(static_cast<long>(m) - 1);
  out.d = mu * m1 / (lambda - mu);
  out.s = -(out.d * out.d) / mu;
  out.conical = out.d > 0 && out.s > 0;
  // Round trip through the forward formulas
  //   lambda = -d (m + d - 1) / s,  mu = -d^2 / s.
  if (out.conical) {
    const BigRational lambda_back = -out.d * (BigRational(static_cast<long>(m)) + out.d - 1) / out.s;
    const BigRational mu_back = -(out.d * out.d) / out.s;
    out.roundtrip_ok = lambda_back == lambda && mu_back == mu;
  }
  // Printed closed forms, evaluated exactly in Q(sqrt(m-1)):
  //   s = -mu (m-1) / (lambda - mu)^2,  d = mu sqrt(m-1) / (lambda - mu).
  const BigRational gap = lambda - mu;
  out.printed_s = -mu * m1 / (gap * gap);
  out.printed_d = QuadExt(BigRational(0), mu / gap, static_cast<unsigned long>(m - 1));
  {
    const QuadExt s_q(out.printed_s, BigRational(0), 0);
    const QuadExt m_minus_1(m1, BigRational(0), 0);
    const QuadExt zero(BigRational(0), BigRational(0), 0);
    if (out.printed_s != 0) {
      // Same forward map as above: lambda = -d (m + d - 1) / s with
      // m + d - 1 = (m - 1) + d.
      const QuadExt lambda_back = (zero - out.printed_d * (m_minus_1 + out.printed_d)) / s_q;
      const QuadExt mu_back = (zero - out.printed_d * out.printed_d) / s_q;
      out.printed_roundtrip_ok = lambda_back == QuadExt(lambda, BigRational(0), 0) &&
                                 mu_back == QuadExt(mu, BigRational(0), 0);
    }
  }
  return out;
}

VerificationReport check_cone_lemma(const MultiPoly& p) {
  VerificationReport r;
  const unsigned m = p.nvars();
  r.task = "cone restriction identities (m=" + std::to_string(m) + ")";
  if (!p.is_homogeneous()) throw std::invalid_argument("check_cone_lemma: p must be homogeneous");
  if (p.is_zero()) {
    r.add("nonzero input", "nonzero", "zero polynomial", false);
    return r;
  }
  const long d = p.total_degree();
  const SphereFunction restricted = reduce_mod_sphere(p);

  const SphereFunction lap_restricted = reduce_mod_sphere(ambient_laplacian(p));
  const SphereFunction lap_expected =
      sphere_laplacian(restricted) +
      GaussianRational(BigRational(d * (d + static_cast<long>(m) - 2))) * restricted;
  r.add("laplacian restriction deg=" + std::to_string(d),
        "lap_ambient(P)|_S = lap_S(P|_S) + d(d+m-2) P|_S",
        lap_restricted == lap_expected ? "matches" : "differs",
        lap_restricted == lap_expected);

  const SphereFunction grad_restricted = reduce_mod_sphere(gradient_inner(p, p));
  const SphereFunction kappa_expected =
      sphere_kappa(restricted, restricted) +
      GaussianRational(BigRational(d * d)) * (restricted * restricted);
  r.add("gradient restriction deg=" + std::to_string(d),
        "|grad P|^2|_S = kappa_S(P|_S, P|_S) + d^2 (P|_S)^2",
        grad_restricted == kappa_expected ? "matches" : "differs",
        grad_restricted == kappa_expected);
  return r;
}

}  // namespace eigenkit::verify
