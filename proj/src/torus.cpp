#include <eigenkit/torus.hpp>

#include <eigenkit/verify.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eigenkit {

namespace {

// floor(sqrt(p/q)) for a nonnegative rational: isqrt of the integer floor.
BigInt floor_sqrt_rational(const BigRational& x) {
  if (x < 0) throw std::invalid_argument("floor_sqrt_rational: negative argument");
  return isqrt_floor(numerator(x) / denominator(x));
}

std::string freq_str(const FreqVector& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

}  // namespace

std::vector<FreqVector> norm_shell(const Lattice& lattice, const BigRational& q) {
  std::vector<FreqVector> shell;
  if (q < 0) return shell;
  const unsigned n = lattice.dim();
  // For <c, Gc> = q the i-th coordinate satisfies c_i^2 <= q (G^-1)_ii.
  std::vector<long> bound(n);
  for (unsigned i = 0; i < n; ++i) {
    const BigRational box = q * lattice.dual_gram().at(i, i);
    bound[i] = floor_sqrt_rational(box).convert_to<long>();
  }
  FreqVector c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = -bound[i];
  for (;;) {
    if (lattice.norm_squared(c) == q) shell.push_back(c);
    unsigned i = n;
    while (i > 0) {
      --i;
      if (c[i] < bound[i]) {
        ++c[i];
        for (unsigned j = i + 1; j < n; ++j) c[j] = -bound[j];
        break;
      }
      if (i == 0) return shell;
    }
  }
}

std::vector<SpectrumValue> spectrum_up_to(const Lattice& torus, const BigRational& bound) {
  if (bound < 0) throw std::invalid_argument("spectrum_up_to: bound must be nonnegative");
  const Lattice dual = dual_lattice(torus);
  const unsigned n = dual.dim();
  std::vector<long> box(n);
  for (unsigned i = 0; i < n; ++i) {
    // (dual of the dual) gram = torus gram
    const BigRational b = bound * dual.dual_gram().at(i, i);
    box[i] = floor_sqrt_rational(b).convert_to<long>();
  }
  std::map<BigRational, std::size_t> counts;
  FreqVector c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = -box[i];
  for (;;) {
    const BigRational q = dual.norm_squared(c);
    if (q <= bound) ++counts[q];
    unsigned i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (c[i] < box[i]) {
        ++c[i];
        for (unsigned j = i + 1; j < n; ++j) c[j] = -box[j];
        done = false;
        break;
      }
    }
    if (done) break;
  }
  std::vector<SpectrumValue> out;
  out.reserve(counts.size());
  for (const auto& [q, mult] : counts) out.push_back(SpectrumValue{q, mult});
  return out;
}

ShellClassification classify_shell(const Lattice& torus, const BigRational& q,
                                   std::uint64_t seed) {
  ShellClassification out;
  out.q = q;
  const Lattice dual = dual_lattice(torus);
  out.shell = norm_shell(dual, q);
  if (out.shell.empty())
    throw std::invalid_argument("classify_shell: q = " + q.str() + " is not a dual norm");

  VerificationReport& r = out.report;
  r.task = "torus classify basis=" + torus.str() + " q=" + q.str();
  const PiScalar mu = PiScalar(GaussianRational(-q)) * PiScalar::pi2();

  // Single characters: each must be an eigenfunction with lambda = mu = -q PI2.
  std::vector<TrigPoly> chars;
  chars.reserve(out.shell.size());
  for (const auto& k : out.shell) chars.push_back(TrigPoly::character(torus, k));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto er = verify::check_eigenfunction(chars[i]);
    const bool ok = er.is_eigen && *er.lambda == mu && *er.mu == mu;
    r.add("span e" + freq_str(out.shell[i]), "eigenfamily with lambda=mu=" + mu.str(),
          ok ? "confirmed" : "violated", ok);
    if (ok) out.span_generators.push_back(out.shell[i]);
  }

  // Distinct pairs: the mixed kappa equation must fail, so no family
  // containing two different characters survives.
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      if (i == j) continue;
      ++out.pairs_checked;
      const bool mixed_ok =
          trig_kappa(chars[i], chars[j]) == (chars[i] * chars[j]) * mu;
      if (!mixed_ok) ++out.pairs_rejected;
      r.add("pair e" + freq_str(out.shell[i]) + ", e" + freq_str(out.shell[j]),
            "mixed kappa equation fails", mixed_ok ? "holds (unexpected span)" : "fails",
            !mixed_ok);
    }
  }

  // Seeded multi-character combinations: none may satisfy the eigenfunction
  // equations.  Coefficients come from a fixed small palette.
  if (out.shell.size() >= 2) {
    Rng rng(seed);
    const std::vector<PiScalar> palette = {
        PiScalar(1),  PiScalar(-1),
        PiScalar(2),  PiScalar(-2),
        PiScalar(BigRational(1) / BigRational(2)),
        PiScalar(BigRational(-1) / BigRational(2))};
    const std::size_t trials = 32;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t max_support = std::min<std::size_t>(4, out.shell.size());
      const std::size_t support = 2 + pick(rng, max_support - 1);
      std::vector<std::size_t> idx;
      while (idx.size() < support) {
        const std::size_t cand = pick(rng, out.shell.size());
        if (std::find(idx.begin(), idx.end(), cand) == idx.end()) idx.push_back(cand);
      }
      TrigPoly f(torus);
      std::string desc;
      for (const auto i : idx) {
        const PiScalar& c = palette[pick(rng, palette.size())];
        f += chars[i] * c;
        desc += (desc.empty() ? "" : " + ") + ("(" + c.str() + ")e" + freq_str(out.shell[i]));
      }
      ++out.combos_checked;
      const auto er = verify::check_eigenfunction(f);
      if (!er.is_eigen) ++out.combos_rejected;
      r.add("combo " + std::to_string(t) + ": " + desc, "not an eigenfunction",
            er.is_eigen ? "eigenfunction (unexpected)" : "rejected", !er.is_eigen);
    }
  }

  out.pass = r.passed() && out.span_generators.size() == out.shell.size();
  return out;
}

}  // namespace eigenkit
