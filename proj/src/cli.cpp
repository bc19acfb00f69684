#include <eigenkit/cli.hpp>

#include <eigenkit/combi.hpp>
#include <eigenkit/lattice.hpp>
#include <eigenkit/report.hpp>
#include <eigenkit/sphere.hpp>
#include <eigenkit/suite.hpp>
#include <eigenkit/torus.hpp>
#include <eigenkit/verify.hpp>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eigenkit::cli {

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
  const auto parse_uint = [](std::string_view s) -> unsigned {
    unsigned v{};
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || p != end)
      throw std::invalid_argument("expected a nonnegative integer, got '" + std::string(s) + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned n = parse_uint(text);
    return {n, n};
  }
  const unsigned lo = parse_uint(text.substr(0, dots));
  const unsigned hi = parse_uint(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

namespace {

using combi::MatrixFamily;

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

std::int64_t elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(now() - start).count();
}

std::pair<unsigned, unsigned> positive_range(const std::string& text) {
  const auto r = parse_range(text);
  if (r.first < 1) throw std::invalid_argument("--n must be at least 1");
  return r;
}

void print_matrix(std::ostream& os, const std::string& title, const IntMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s = m.at(i, j).str();
      if (s.size() > width[j]) width[j] = s.size();
      cells[i * m.cols() + j] = std::move(s);
    }
  }
  os << title << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[i * m.cols() + j];
      os << "  " << std::string(width[j] - s.size(), ' ') << s;
    }
    os << "\n";
  }
}

VerificationReport combi_det_task(const std::string& family_text, const std::string& n_text,
                                  bool transpose, bool text_format) {
  if (family_text == "Brect")
    throw std::invalid_argument("family Brect is rectangular; determinant tasks apply to A or B");
  const MatrixFamily family = family_text == "A" ? MatrixFamily::A : MatrixFamily::BSquare;
  const auto [lo, hi] = positive_range(n_text);
  const auto start = now();
  VerificationReport out;
  out.task = "combi det family=" + family_text + " n=" + n_text;
  std::vector<VerificationReport> parts(hi - lo + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i <= static_cast<long>(hi - lo); ++i)
    parts[static_cast<std::size_t>(i)] = combi::verify_det(family, lo + static_cast<unsigned>(i));
  for (const auto& p : parts) out.merge(p);
  if (text_format && lo == hi) {
    IntMatrix m = combi::build_matrix(family, lo);
    std::string title = combi::family_name(family) + "(" + std::to_string(lo) + ")";
    if (transpose) {
      m = m.transpose();
      title += " transposed";
    }
    print_matrix(std::cout, title, m);
  }
  out.ms = elapsed(start);
  return out;
}

VerificationReport combi_kernel_task(const std::string& n_text) {
  const auto [lo, hi] = positive_range(n_text);
  const auto start = now();
  VerificationReport out;
  out.task = "combi kernel n=" + n_text;
  std::vector<VerificationReport> parts(hi - lo + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i <= static_cast<long>(hi - lo); ++i)
    parts[static_cast<std::size_t>(i)] = combi::verify_kernel(lo + static_cast<unsigned>(i));
  for (const auto& p : parts) out.merge(p);
  out.ms = elapsed(start);
  return out;
}

VerificationReport combi_polys_task(const std::string& n_text) {
  const auto [lo, hi] = positive_range(n_text);
  const auto start = now();
  VerificationReport out;
  out.task = "combi polys n=" + n_text;
  const std::pair<combi::PolyKind, const char*> kinds[] = {
      {combi::PolyKind::P, "P"}, {combi::PolyKind::Alpha, "alpha"}, {combi::PolyKind::Beta, "beta"}};
  for (unsigned n = lo; n <= hi; ++n) {
    for (const auto& [kind, name] : kinds) {
      bool ok = true;
      unsigned bad_l = 0;
      for (unsigned l = 0; l <= n && ok; ++l) {
        if (!combi::gen_poly(kind, l, n).equal) {
          ok = false;
          bad_l = l;
        }
      }
      out.add(std::string(name) + " n=" + std::to_string(n),
              "definition matches closed form for l=0.." + std::to_string(n),
              ok ? "equal" : "mismatch at l=" + std::to_string(bad_l), ok);
    }
  }
  out.ms = elapsed(start);
  return out;
}

VerificationReport combi_recur_task(const std::string& n_text) {
  const auto [lo, hi] = positive_range(n_text);
  const auto start = now();
  VerificationReport out;
  out.task = "combi recur n=" + n_text;
  for (unsigned n = lo; n <= hi; ++n) {
    const auto rep = combi::verify_recurrences(n);
    for (const auto& it : rep.items)
      out.add("n=" + std::to_string(n) + " " + it.id, it.expected, it.computed, it.pass);
  }
  out.ms = elapsed(start);
  return out;
}

VerificationReport sphere_verify_coordinates(const std::string& n_text) {
  const auto [lo, hi] = positive_range(n_text);
  const auto start = now();
  VerificationReport r;
  r.task = "sphere verify example=coordinates n=" + n_text;
  for (unsigned n = lo; n <= hi; ++n) {
    const auto res = verify::check_eigenfamily(example_coordinates(n));
    const GaussianRational want_lambda(BigRational(-(2L * n - 1)));
    const GaussianRational want_mu(BigRational(-1));
    r.add("n=" + std::to_string(n) + " is eigenfamily", "true", res.pass ? "true" : "false",
          res.pass);
    if (res.pass) {
      r.add("n=" + std::to_string(n) + " lambda", want_lambda.str(), to_string(*res.lambda),
            *res.lambda == want_lambda);
      r.add("n=" + std::to_string(n) + " mu", want_mu.str(), to_string(*res.mu),
            *res.mu == want_mu);
    }
  }
  r.ms = elapsed(start);
  return r;
}

VerificationReport sphere_verify_s7(const GaussianRational& a, const GaussianRational& b,
                                    const GaussianRational& c, const GaussianRational& d) {
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())
    throw std::invalid_argument("s7 parameters must not all be zero");
  const auto start = now();
  VerificationReport r;
  r.task = "sphere verify example=s7 a=" + a.str() + " b=" + b.str() + " c=" + c.str() +
           " d=" + d.str();
  const auto er = verify::check_eigenfunction(example_s7(a, b, c, d));
  r.add("is eigenfunction", "true", er.is_eigen ? "true" : "false", er.is_eigen);
  if (er.is_eigen) {
    r.add("mu", "-9", to_string(*er.mu), *er.mu == GaussianRational(BigRational(-9)));
    r.add("lambda", "-27", to_string(*er.lambda),
          *er.lambda == GaussianRational(BigRational(-27)));
    r.note("cited lambda", "-15", to_string(*er.lambda) + " (disagrees with the cited value)");
  }
  r.ms = elapsed(start);
  return r;
}

VerificationReport sphere_l2_task(const std::string& example, const std::string& n_text,
                                  unsigned max_degree, const GaussianRational& a,
                                  const GaussianRational& b, const GaussianRational& c,
                                  const GaussianRational& d) {
  const auto [lo, hi] = positive_range(n_text);
  if (lo != hi) throw std::invalid_argument("sphere l2 needs a single --n, not a range");
  const auto start = now();
  SphereFunction f;
  if (example == "coordinates") {
    f = example_coordinates(lo)[0];
  } else {
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())
      throw std::invalid_argument("s7 parameters must not all be zero");
    f = example_s7(a, b, c, d);
  }
  const unsigned ratio_bound = max_degree < 5 ? max_degree : 5;
  VerificationReport r = verify::check_l2_powers(f, max_degree, ratio_bound);
  r.task = "sphere l2 example=" + example +
           (example == "coordinates" ? " n=" + std::to_string(lo) : "") +
           " vanish<=" + std::to_string(max_degree) + " ratio<=" + std::to_string(ratio_bound);
  r.ms = elapsed(start);
  return r;
}

VerificationReport torus_classify_task(const std::string& basis_text, const std::string& q_text,
                                       std::uint64_t seed) {
  const auto start = now();
  const Lattice torus = Lattice::parse(basis_text);
  const BigRational q = parse_rational(q_text);
  auto cls = classify_shell(torus, q, seed);
  VerificationReport r = std::move(cls.report);
  r.add("span count", std::to_string(cls.shell.size()),
        std::to_string(cls.span_generators.size()),
        cls.span_generators.size() == cls.shell.size());
  r.ms = elapsed(start);
  return r;
}

VerificationReport torus_spectrum_task(const std::string& basis_text, const std::string& q_text) {
  const auto start = now();
  const Lattice torus = Lattice::parse(basis_text);
  const BigRational bound = parse_rational(q_text);
  VerificationReport r;
  r.task = "torus spectrum basis=" + torus.str() + " q<=" + bound.str();
  for (const auto& sv : spectrum_up_to(torus, bound))
    r.add("q=" + sv.q.str(), "realized", "multiplicity " + std::to_string(sv.multiplicity), true);
  r.ms = elapsed(start);
  return r;
}

VerificationReport cone_check_task(const std::string& n_text, unsigned max_degree,
                                   std::uint64_t seed) {
  const auto [lo, hi] = positive_range(n_text);
  if (lo < 2) throw std::invalid_argument("cone check needs ambient dimension --n >= 2");
  return suite::cone_check(seed, lo, hi, max_degree);
}

struct Common {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", c.seed, "Seed for randomized sweeps (EIGENKIT_SEED overrides)");
  cmd->add_option("--jobs", c.jobs, "Worker thread cap; affects wall time only");
}

int emit(const std::vector<VerificationReport>& reports, const Common& c) {
  if (c.format == "json") {
    if (reports.size() == 1)
      std::cout << report_to_json(reports.front()) << "\n";
    else
      std::cout << reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) std::cout << report_to_text(r);
  }
  for (const auto& r : reports)
    if (r.status() == Status::fail) return 1;
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"eigenkit: exact verification of (lambda, mu)-eigenfamily computations"};
  app.require_subcommand(1);

  Common common;

  auto* combi_cmd = app.add_subcommand("combi", "Binomial coefficient matrix families");
  combi_cmd->require_subcommand(1);

  std::string det_family = "A", det_n;
  bool det_transpose = false;
  auto* det = combi_cmd->add_subcommand("det", "Determinant identities");
  det->add_option("--family", det_family, "Matrix family")
      ->check(CLI::IsMember({"A", "B", "Brect"}));
  det->add_option("--n", det_n, "Order n or range a..b")->required();
  det->add_flag("--transpose", det_transpose, "Print the matrix transposed (text mode)");
  add_common(det, common);

  std::string kernel_n;
  auto* kernel = combi_cmd->add_subcommand(
      "kernel", "Kernel of the rectangular family at even order 2n");
  kernel->add_option("--n", kernel_n, "Half-order n or range a..b")->required();
  add_common(kernel, common);

  std::string polys_n;
  auto* polys = combi_cmd->add_subcommand(
      "polys", "Generating polynomials: row definition vs closed form");
  polys->add_option("--n", polys_n, "Order n or range a..b")->required();
  add_common(polys, common);

  std::string recur_n;
  auto* recur = combi_cmd->add_subcommand("recur", "Row recurrences R1-R4");
  recur->add_option("--n", recur_n, "Order n or range a..b")->required();
  add_common(recur, common);

  auto* sphere_cmd = app.add_subcommand("sphere", "Eigenfamilies on round spheres");
  sphere_cmd->require_subcommand(1);

  std::string sv_example, sv_n = "2..6";
  std::string sv_a = "1", sv_b = "0", sv_c = "0", sv_d = "0";
  auto* sverify = sphere_cmd->add_subcommand("verify", "Eigenfamily equations for an example");
  sverify->add_option("--example", sv_example, "Example family")
      ->check(CLI::IsMember({"coordinates", "s7"}))
      ->required();
  sverify->add_option("--n", sv_n, "coordinates: n or range a..b (sphere S^(2n-1))");
  sverify->add_option("--a", sv_a, "s7: coefficient a (Gaussian rational)");
  sverify->add_option("--b", sv_b, "s7: coefficient b");
  sverify->add_option("--c", sv_c, "s7: coefficient c");
  sverify->add_option("--d", sv_d, "s7: coefficient d");
  add_common(sverify, common);

  std::string sl_example = "coordinates", sl_n = "2";
  std::string sl_a = "1", sl_b = "0", sl_c = "0", sl_d = "0";
  unsigned sl_deg = 10;
  auto* sl2 = sphere_cmd->add_subcommand("l2", "L2 power relations for one eigenfunction");
  sl2->add_option("--example", sl_example, "Example family")
      ->check(CLI::IsMember({"coordinates", "s7"}));
  sl2->add_option("--n", sl_n, "coordinates: single n (sphere S^(2n-1))");
  sl2->add_option("--max-degree", sl_deg, "Bound on a+b in the vanishing sweep");
  sl2->add_option("--a", sl_a, "s7: coefficient a (Gaussian rational)");
  sl2->add_option("--b", sl_b, "s7: coefficient b");
  sl2->add_option("--c", sl_c, "s7: coefficient c");
  sl2->add_option("--d", sl_d, "s7: coefficient d");
  add_common(sl2, common);

  auto* torus_cmd = app.add_subcommand("torus", "Eigenfamilies on flat tori");
  torus_cmd->require_subcommand(1);

  std::string tc_basis, tc_q;
  auto* tclassify = torus_cmd->add_subcommand(
      "classify", "Classify eigenfamilies inside one norm shell");
  tclassify->add_option("--basis", tc_basis, "Lattice basis rows, e.g. \"1,0;1/2,1\"")
      ->required();
  tclassify->add_option("--q", tc_q, "Shell norm (rational)")->required();
  add_common(tclassify, common);

  std::string ts_basis, ts_q;
  auto* tspectrum = torus_cmd->add_subcommand("spectrum", "Realized dual norms up to a bound");
  tspectrum->add_option("--basis", ts_basis, "Lattice basis rows, e.g. \"1,0;0,1\"")
      ->required();
  tspectrum->add_option("--q", ts_q, "Upper bound (rational)")->required();
  add_common(tspectrum, common);

  auto* cone_cmd = app.add_subcommand("cone", "Cone correspondence");
  cone_cmd->require_subcommand(1);

  std::string cc_n = "2..6";
  unsigned cc_deg = 4;
  auto* ccheck = cone_cmd->add_subcommand("check", "Restriction identities and parameter round-trips");
  ccheck->add_option("--n", cc_n, "Ambient dimension or range a..b");
  ccheck->add_option("--max-degree", cc_deg, "Polynomial degree bound");
  add_common(ccheck, common);

  auto* full = app.add_subcommand("full-suite", "All acceptance criteria (CI entry point)");
  add_common(full, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("EIGENKIT_SEED")) {
    const std::string_view sv(env);
    std::uint64_t v{};
    const char* end = sv.data() + sv.size();
    const auto [p, ec] = std::from_chars(sv.data(), end, v);
    if (sv.empty() || ec != std::errc() || p != end) {
      std::cerr << "eigenkit: EIGENKIT_SEED is not an unsigned integer: '" << env << "'\n";
      return 2;
    }
    common.seed = v;
  }
#ifdef _OPENMP
  if (common.jobs > 0) omp_set_num_threads(common.jobs);
#endif

  std::vector<VerificationReport> reports;
  try {
    if (det->parsed()) {
      reports.push_back(
          combi_det_task(det_family, det_n, det_transpose, common.format == "text"));
    } else if (kernel->parsed()) {
      reports.push_back(combi_kernel_task(kernel_n));
    } else if (polys->parsed()) {
      reports.push_back(combi_polys_task(polys_n));
    } else if (recur->parsed()) {
      reports.push_back(combi_recur_task(recur_n));
    } else if (sverify->parsed()) {
      if (sv_example == "coordinates") {
        reports.push_back(sphere_verify_coordinates(sv_n));
      } else {
        reports.push_back(sphere_verify_s7(parse_gaussian(sv_a), parse_gaussian(sv_b),
                                           parse_gaussian(sv_c), parse_gaussian(sv_d)));
      }
    } else if (sl2->parsed()) {
      reports.push_back(sphere_l2_task(sl_example, sl_n, sl_deg, parse_gaussian(sl_a),
                                       parse_gaussian(sl_b), parse_gaussian(sl_c),
                                       parse_gaussian(sl_d)));
    } else if (tclassify->parsed()) {
      reports.push_back(torus_classify_task(tc_basis, tc_q, common.seed));
    } else if (tspectrum->parsed()) {
      reports.push_back(torus_spectrum_task(ts_basis, ts_q));
    } else if (ccheck->parsed()) {
      reports.push_back(cone_check_task(cc_n, cc_deg, common.seed));
    } else if (full->parsed()) {
      reports = suite::run_full_suite(suite::Options{common.seed});
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "eigenkit: " << e.what() << "\n";
    return 2;
  }

  return emit(reports, common);
}

}  // namespace eigenkit::cli
