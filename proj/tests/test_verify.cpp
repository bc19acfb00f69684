#include <doctest.h>

#include <eigenkit/lattice.hpp>
#include <eigenkit/sphere.hpp>
#include <eigenkit/torus.hpp>
#include <eigenkit/trigpoly.hpp>
#include <eigenkit/verify.hpp>

#include <stdexcept>
#include <vector>

using namespace eigenkit;
using namespace eigenkit::verify;

TEST_CASE("proportionality ratios in both scalar rings") {
  const auto zs = example_coordinates(2);
  const SphereFunction& z1 = zs[0];
  CHECK(proportionality_ratio(GaussianRational(3) * z1, z1) == GaussianRational(3));
  CHECK_FALSE(proportionality_ratio(z1 * z1, z1).has_value());
  CHECK_FALSE(proportionality_ratio(z1, SphereFunction::zero(4)).has_value());

  const Lattice z2 = Lattice::standard(2);
  const TrigPoly e10 = TrigPoly::character(z2, {1, 0});
  CHECK(proportionality_ratio(PiScalar::pi2() * e10, e10) == PiScalar::pi2());
  // 1 / PI2 does not exist in the coefficient ring.
  CHECK_FALSE(proportionality_ratio(e10, PiScalar::pi2() * e10).has_value());
}

TEST_CASE("eigenfunction check on model functions") {
  const auto zs = example_coordinates(2);
  const auto er = check_eigenfunction(zs[0]);
  CHECK(er.is_eigen);
  CHECK(*er.lambda == GaussianRational(-3));
  CHECK(*er.mu == GaussianRational(-1));

  const Lattice z2 = Lattice::standard(2);
  const TrigPoly e10 = TrigPoly::character(z2, {1, 0});
  const auto et = check_eigenfunction(e10);
  CHECK(et.is_eigen);
  CHECK(*et.lambda == -PiScalar::pi2());
  CHECK(*et.mu == -PiScalar::pi2());

  // Shifting by a constant breaks the Laplacian equation.
  const auto shifted =
      check_eigenfunction(zs[0] + SphereFunction::constant(4, GaussianRational(1)));
  CHECK_FALSE(shifted.is_eigen);

  // 2cos(2 pi x): still a Laplace eigenfunction, but kappa(f, f) is not
  // proportional to f^2, so it is not an eigenfunction in this sense.
  const TrigPoly cosine = e10 + e10.conjugate();
  const auto ec = check_eigenfunction(cosine);
  CHECK(ec.lambda.has_value());
  CHECK(*ec.lambda == -PiScalar::pi2());
  CHECK_FALSE(ec.mu.has_value());
  CHECK_FALSE(ec.is_eigen);

  CHECK_FALSE(check_eigenfunction(SphereFunction::zero(4)).is_eigen);
}

TEST_CASE("eigenfamily check enforces shared eigenvalues and mixed kappa") {
  const auto zs = example_coordinates(2);
  const auto fam = check_eigenfamily(zs);
  CHECK(fam.pass);
  CHECK(*fam.lambda == GaussianRational(-3));
  CHECK(*fam.mu == GaussianRational(-1));
  CHECK(fam.failures.empty());

  // Characters with orthogonal frequencies: members pass individually but
  // kappa(e10, e01) = 0 != mu e10 e01.
  const Lattice z2 = Lattice::standard(2);
  const std::vector<TrigPoly> pair = {TrigPoly::character(z2, {1, 0}),
                                      TrigPoly::character(z2, {0, 1})};
  const auto mixed = check_eigenfamily(pair);
  CHECK_FALSE(mixed.pass);
  REQUIRE(mixed.failures.size() == 1);
  CHECK(mixed.failures[0] == "kappa(f_0, f_1) != mu f_0 f_1");

  // Members from different eigenvalues cannot share (lambda, mu).
  const std::vector<TrigPoly> diff = {TrigPoly::character(z2, {1, 0}),
                                      TrigPoly::character(z2, {1, 1})};
  const auto unequal = check_eigenfamily(diff);
  CHECK_FALSE(unequal.pass);

  CHECK_FALSE(check_eigenfamily(std::vector<SphereFunction>{}).pass);
}

TEST_CASE("power eigenvalue formula") {
  CHECK(power_eigenvalue(1, GaussianRational(-3), GaussianRational(-1)) == GaussianRational(-3));
  CHECK(power_eigenvalue(2, GaussianRational(-3), GaussianRational(-1)) == GaussianRational(-8));
  CHECK(power_eigenvalue(3, GaussianRational(-3), GaussianRational(-1)) == GaussianRational(-15));
  const PiScalar pi2 = PiScalar::pi2();
  CHECK(power_eigenvalue(2, -pi2, -pi2) == PiScalar(-4) * pi2);
}

TEST_CASE("powers of an eigenfunction close under the verified eigenvalue map") {
  const auto zs = example_coordinates(2);
  CHECK(check_power_closure(zs[0], 4).passed());

  const Lattice z2 = Lattice::standard(2);
  CHECK(check_power_closure(TrigPoly::character(z2, {1, 0}), 4).passed());

  // Non-eigenfunction input stops after the base check.
  const auto bad = check_power_closure(
      TrigPoly::character(z2, {1, 0}) + TrigPoly::character(z2, {1, 0}).conjugate(), 3);
  CHECK_FALSE(bad.passed());
  CHECK(bad.items.size() == 1);
}

TEST_CASE("eigenvalue ordering checks") {
  CHECK(lambda_mu_order_ok(GaussianRational(-3), GaussianRational(-1)) == true);
  CHECK(lambda_mu_order_ok(GaussianRational(-1), GaussianRational(-3)) == false);
  CHECK(lambda_mu_order_ok(GaussianRational(-1), GaussianRational(1)) == false);
  CHECK_FALSE(lambda_mu_order_ok(GaussianRational::i(), GaussianRational(-1)).has_value());

  const PiScalar pi2 = PiScalar::pi2();
  CHECK(lambda_mu_order_ok(-pi2, -pi2) == true);
  CHECK(lambda_mu_order_ok(PiScalar(-2) * pi2, -pi2) == true);
  CHECK(lambda_mu_order_ok(-pi2, PiScalar(-2) * pi2) == false);
  CHECK_FALSE(lambda_mu_order_ok(-pi2, -pi2 * pi2).has_value());  // degree 2: undecidable

  const auto zs = example_coordinates(2);
  const auto r = check_lambda_mu_order(zs[0]);
  CHECK(r.status() == Status::pass);
}

TEST_CASE("spectrum condition for torus power eigenvalues") {
  const Lattice z2 = Lattice::standard(2);
  const PiScalar pi2 = PiScalar::pi2();
  CHECK(check_spectrum_condition(-pi2, -pi2, z2, 10).passed());
  CHECK(check_spectrum_condition(PiScalar(-2) * pi2, PiScalar(-2) * pi2, z2, 10).passed());

  // q = 3 is not a sum of two squares, so d = 1 already fails.
  const auto three = check_spectrum_condition(PiScalar(-3) * pi2, PiScalar(-3) * pi2, z2, 3);
  CHECK_FALSE(three.passed());
  CHECK_FALSE(three.items[0].pass);

  // Eigenvalues of the wrong shape are rejected, not miscomputed.
  const auto wrong = check_spectrum_condition(PiScalar(1), PiScalar(1), z2, 1);
  CHECK_FALSE(wrong.passed());
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt root2(BigRational(0), BigRational(1), 2);
  const QuadExt one(BigRational(1), BigRational(0), 0);
  const QuadExt x = one + root2;  // 1 + sqrt(2)
  CHECK(x * x == QuadExt(BigRational(3), BigRational(2), 2));
  CHECK((x * x) / x == x);
  CHECK(x.str() == "1+1*sqrt(2)");
  CHECK(QuadExt(BigRational(0), BigRational(1), 4) == QuadExt(BigRational(2), BigRational(0), 0));
  CHECK(QuadExt(BigRational(1), BigRational(1), 4).is_rational());
  CHECK_THROWS_AS(x / QuadExt(BigRational(0), BigRational(0), 0), std::domain_error);
  CHECK_THROWS_AS(root2 * QuadExt(BigRational(0), BigRational(1), 3), std::invalid_argument);
}

TEST_CASE("cone parameter inversion") {
  const auto cp = cone_parameters(BigRational(-3), BigRational(-1), 3);
  CHECK(cp.conical);
  CHECK(cp.d == 1);
  CHECK(cp.s == 1);
  CHECK(cp.roundtrip_ok);
  // The printed closed forms give sqrt(2)/2 and 1/2, which do not invert.
  CHECK(cp.printed_d == QuadExt(BigRational(0), BigRational(1) / BigRational(2), 2));
  CHECK(cp.printed_s == BigRational(1) / BigRational(2));
  CHECK_FALSE(cp.printed_roundtrip_ok);

  // On a 2-dimensional base both versions coincide and both invert.
  const auto flat = cone_parameters(BigRational(-3), BigRational(-1), 2);
  CHECK(flat.conical);
  CHECK(flat.d == BigRational(1) / BigRational(2));
  CHECK(flat.s == BigRational(1) / BigRational(4));
  CHECK(flat.roundtrip_ok);
  CHECK(flat.printed_roundtrip_ok);

  CHECK_FALSE(cone_parameters(BigRational(-3), BigRational(-3), 4).conical);  // lambda = mu
  CHECK_FALSE(cone_parameters(BigRational(-3), BigRational(0), 4).conical);   // mu = 0
  // lambda > mu flips the sign of d.
  CHECK_FALSE(cone_parameters(BigRational(-1), BigRational(-3), 4).conical);

  // Any lambda < mu < 0 is conical and the corrected inversion round-trips.
  for (long mu_num = -5; mu_num < 0; ++mu_num)
    for (long gap = 1; gap <= 4; ++gap)
      for (unsigned m = 2; m <= 6; ++m) {
        const BigRational mu(mu_num);
        const auto c = cone_parameters(mu - BigRational(gap), mu, m);
        CHECK(c.conical);
        CHECK(c.roundtrip_ok);
      }
}

TEST_CASE("restriction identities between ambient and sphere calculus") {
  const MultiPoly cubic = s7_ambient_polynomial(GaussianRational(1), GaussianRational(),
                                                GaussianRational(2), GaussianRational::i());
  CHECK(check_cone_lemma(cubic).passed());

  // Low-dimensional harmonic and non-harmonic cases.
  const MultiPoly x0 = MultiPoly::variable(3, 0);
  const MultiPoly x1 = MultiPoly::variable(3, 1);
  CHECK(check_cone_lemma(x0 * x0 * x0).passed());
  CHECK(check_cone_lemma(x0 * x1 - x1 * x1).passed());
  CHECK(check_cone_lemma(radius_squared(3)).passed());

  CHECK_THROWS_AS(check_cone_lemma(x0 + x0 * x0), std::invalid_argument);
  CHECK_FALSE(check_cone_lemma(MultiPoly(3)).passed());  // zero polynomial rejected
}

TEST_CASE("l2 statements for powers of one eigenfunction") {
  const auto zs = example_coordinates(2);
  const auto sphere_report = check_l2_powers(zs[0], 4, 2);
  CHECK(sphere_report.passed());
  bool saw_norm_item = false;
  for (const auto& it : sphere_report.items) saw_norm_item |= it.id == "int f1^2 = int f2^2";
  CHECK(saw_norm_item);

  const Lattice z2 = Lattice::standard(2);
  CHECK(check_l2_powers(TrigPoly::character(z2, {1, 0}), 4, 2).passed());

  const auto bad = check_l2_powers(zs[0] + SphereFunction::constant(4, GaussianRational(1)), 2, 1);
  CHECK_FALSE(bad.passed());
  CHECK(bad.items.size() == 1);
}

TEST_CASE("l2 statements for families") {
  const auto zs = example_coordinates(2);
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> tuples = {
      {{1, 0}, {0, 0}},  // odd total
      {{1, 1}, {1, 0}},  // odd total
      {{1, 1}, {1, 1}},  // even: swap is the identity here
      {{2, 0}, {0, 0}},
      {{1, 0}, {1, 0}},  // even with odd b-sum: swap flips the sign
      {{2, 1}, {0, 1}},
  };
  const auto r = check_l2_family(zs, tuples);
  CHECK(r.passed());
  CHECK(r.items.size() == tuples.size() + 1);  // one item per tuple plus the family check

  CHECK_THROWS_AS(check_l2_family(zs, {{{1}, {0}}}), std::invalid_argument);
}
