#include <doctest.h>

#include <eigenkit/bigint.hpp>
#include <eigenkit/gaussian.hpp>
#include <eigenkit/matrix.hpp>
#include <eigenkit/pi_scalar.hpp>
#include <eigenkit/rng.hpp>

#include "support.hpp"

#include <stdexcept>
#include <vector>

using namespace eigenkit;
using testsupport::binomial_pascal;
using testsupport::det_reference;
using testsupport::random_int_matrix;

TEST_CASE("binomial matches the Pascal recursion and vanishes out of range") {
  for (unsigned n = 0; n <= 25; ++n)
    for (long k = -2; k <= static_cast<long>(n) + 2; ++k)
      CHECK(binomial(n, k) == binomial_pascal(n, k));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("factorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(falling_factorial(7, 3) == 210);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(3, 5) == 0);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(falling_factorial(n, k) * factorial(n - k) == factorial(n));
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(odd_double_factorial(0) == 1);
  CHECK(odd_double_factorial(2) == 1);
  CHECK(odd_double_factorial(4) == 3);
  CHECK(odd_double_factorial(6) == 15);
  CHECK(odd_double_factorial(8) == 105);
}

TEST_CASE("integer square root floor") {
  CHECK(isqrt_floor(BigInt(0)) == 0);
  CHECK(isqrt_floor(BigInt(15)) == 3);
  CHECK(isqrt_floor(BigInt(16)) == 4);
  CHECK(isqrt_floor(BigInt(17)) == 4);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), std::invalid_argument);
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 50; ++t) {
    const BigInt x = BigInt(pick_long(rng, 0, 1000000));
    const BigInt r = isqrt_floor(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
}

TEST_CASE("parse_rational canonicalizes and rejects garbage") {
  CHECK(parse_rational("5") == BigRational(5));
  CHECK(parse_rational("-7/2") == BigRational(-7) / BigRational(2));
  CHECK(parse_rational("2/4") == BigRational(1) / BigRational(2));
  CHECK(parse_rational("-6/-4") == BigRational(3) / BigRational(2));
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("bareiss determinant agrees with plain rational elimination") {
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + pick(rng, 8);
    const IntMatrix m = random_int_matrix(rng, n, -9, 9);
    CHECK(det_bareiss(m) == det_reference(m));
  }
}

TEST_CASE("parallel and serial bareiss kernels are bit-identical") {
  Rng rng(kDefaultSeed + 1);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + pick(rng, 10);
    const IntMatrix m = random_int_matrix(rng, n, -20, 20);
    CHECK(det_bareiss(m) == det_bareiss_serial(m));
  }
}

TEST_CASE("determinant basics") {
  CHECK(det_bareiss(IntMatrix(0, 0)) == 1);
  CHECK(det_bareiss(IntMatrix{{-7}}) == -7);
  CHECK(det_bareiss(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(det_bareiss(IntMatrix{{2, 0, 1}, {1, 1, 0}, {3, 2, 1}}) == 1);
  CHECK(det_bareiss(IntMatrix::identity(6)) == 1);
  // Repeated row and zero column both force a zero determinant.
  CHECK(det_bareiss(IntMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
  CHECK(det_bareiss(IntMatrix{{0, 2, 3}, {0, 5, 6}, {0, 8, 9}}) == 0);
  CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant respects transpose and products") {
  Rng rng(kDefaultSeed + 2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + pick(rng, 6);
    const IntMatrix a = random_int_matrix(rng, n, -9, 9);
    const IntMatrix b = random_int_matrix(rng, n, -9, 9);
    CHECK(det_bareiss(a.transpose()) == det_bareiss(a));
    CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
  }
}

TEST_CASE("kernel_basis returns genuine kernel vectors in normalized form") {
  const auto basis = kernel_basis(RatMatrix{{1, 2}, {2, 4}});
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<BigRational>{BigRational(1), BigRational(-1) / BigRational(2)});

  CHECK(kernel_basis(to_rational(IntMatrix::identity(4))).empty());

  Rng rng(kDefaultSeed + 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + pick(rng, 5);
    const std::size_t cols = 1 + pick(rng, 6);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = BigRational(pick_long(rng, -4, 4));
    for (const auto& v : kernel_basis(m)) {
      bool normalized_seen = false;
      for (const auto& x : v) {
        if (x != 0) {
          CHECK(x == 1);  // first nonzero entry
          normalized_seen = true;
          break;
        }
      }
      CHECK(normalized_seen);
      for (const auto& y : m.apply(v)) CHECK(y == 0);
    }
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  Rng rng(kDefaultSeed + 4);
  int done = 0;
  while (done < 20) {
    const std::size_t n = 1 + pick(rng, 5);
    const IntMatrix m = random_int_matrix(rng, n, -5, 5);
    if (det_bareiss(m) == 0) continue;
    const RatMatrix q = to_rational(m);
    CHECK(q * inverse(q) == RatMatrix::identity(n));
    CHECK(inverse(q) * q == RatMatrix::identity(n));
    ++done;
  }
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), std::domain_error);
  CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("gaussian rationals form a field") {
  const GaussianRational z(BigRational(1), BigRational(2));   // 1 + 2i
  const GaussianRational w(BigRational(3), BigRational(-1));  // 3 - i
  CHECK(z * w == GaussianRational(BigRational(5), BigRational(5)));
  CHECK(z + w == GaussianRational(BigRational(4), BigRational(1)));
  CHECK((z / w) * w == z);
  CHECK(z * z.conj() == GaussianRational(z.norm()));
  CHECK(z.norm() == 5);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("gaussian printing and parsing invert each other") {
  CHECK(GaussianRational(BigRational(1) / BigRational(2)).str() == "1/2");
  CHECK(GaussianRational(BigRational(0), BigRational(-1) / BigRational(3)).str() == "-1/3*i");
  CHECK(GaussianRational(BigRational(1) / BigRational(2), BigRational(-1) / BigRational(3)).str() ==
        "1/2-1/3*i");
  CHECK(GaussianRational::i().str() == "1*i");

  CHECK(parse_gaussian("i") == GaussianRational::i());
  CHECK(parse_gaussian("-i") == -GaussianRational::i());
  CHECK(parse_gaussian("2-i") == GaussianRational(BigRational(2), BigRational(-1)));
  CHECK(parse_gaussian("-3/4+5/7*i") ==
        GaussianRational(BigRational(-3) / BigRational(4), BigRational(5) / BigRational(7)));
  CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);

  Rng rng(kDefaultSeed + 5);
  for (int t = 0; t < 100; ++t) {
    const GaussianRational g(BigRational(pick_long(rng, -9, 9)) / BigRational(pick_long(rng, 1, 5)),
                             BigRational(pick_long(rng, -9, 9)) / BigRational(pick_long(rng, 1, 5)));
    CHECK(parse_gaussian(g.str()) == g);
  }
}

TEST_CASE("pi scalars multiply as polynomials in the symbol") {
  const PiScalar p = PiScalar(3) + PiScalar::pi2();               // 3 + PI2
  const PiScalar q = PiScalar(-1) + PiScalar(2) * PiScalar::pi2();  // -1 + 2*PI2
  const PiScalar prod = p * q;
  CHECK(prod.degree() == 2);
  CHECK(prod.coeff(0) == GaussianRational(-3));
  CHECK(prod.coeff(1) == GaussianRational(5));
  CHECK(prod.coeff(2) == GaussianRational(2));
  CHECK(p - p == PiScalar());
  CHECK(PiScalar().is_zero());
  CHECK(PiScalar().degree() == -1);
  CHECK((PiScalar::pi2() * PiScalar::pi2()).degree() == 2);
  CHECK(p.is_real());
  CHECK_FALSE((PiScalar(GaussianRational::i()) * PiScalar::pi2()).is_real());
}

TEST_CASE("pi scalar printing") {
  CHECK(PiScalar().str() == "0");
  CHECK(PiScalar::pi2().str() == "PI2");
  CHECK((-PiScalar::pi2()).str() == "-PI2");
  CHECK((PiScalar(BigRational(3) / BigRational(2)) - PiScalar(2) * PiScalar::pi2()).str() ==
        "3/2 - 2*PI2");
  CHECK((PiScalar::pi2() * PiScalar::pi2()).str() == "PI2^2");
  CHECK((PiScalar(GaussianRational::i()) * PiScalar::pi2()).str() == "(1*i)*PI2");
}

TEST_CASE("try_divide is exact division in the ring") {
  const PiScalar pi2 = PiScalar::pi2();
  const auto quot = try_divide(pi2 * pi2 - PiScalar(1), pi2 - PiScalar(1));
  REQUIRE(quot.has_value());
  CHECK(*quot == pi2 + PiScalar(1));
  CHECK_FALSE(try_divide(pi2 + PiScalar(1), pi2).has_value());
  CHECK_FALSE(try_divide(PiScalar(1), PiScalar()).has_value());
  CHECK(try_divide(PiScalar(), pi2) == PiScalar());
  CHECK(try_divide(PiScalar(2) * pi2, PiScalar(2)) == pi2);

  Rng rng(kDefaultSeed + 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<GaussianRational> ac(1 + pick(rng, 3)), bc(1 + pick(rng, 3));
    for (auto& c : ac) c = GaussianRational(BigRational(pick_long(rng, -5, 5)));
    for (auto& c : bc) c = GaussianRational(BigRational(pick_long(rng, -5, 5)));
    const PiScalar a{std::vector<GaussianRational>(ac)}, b{std::vector<GaussianRational>(bc)};
    if (b.is_zero()) continue;
    const auto back = try_divide(a * b, b);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
}

TEST_CASE("sign_if_decidable brackets the symbol between rationals") {
  const PiScalar pi2 = PiScalar::pi2();
  CHECK(sign_if_decidable(PiScalar()) == 0);
  CHECK(sign_if_decidable(PiScalar(-5)) == -1);
  CHECK(sign_if_decidable(pi2 - PiScalar(39)) == 1);
  CHECK(sign_if_decidable(PiScalar(40) - pi2) == 1);
  CHECK(sign_if_decidable(PiScalar(39) - pi2) == -1);
  // Root inside the bracket: undecidable by design.
  const BigRational inside = BigRational(BigInt("394784176045")) / BigRational(BigInt("10000000000"));
  CHECK_FALSE(sign_if_decidable(pi2 - PiScalar(inside)).has_value());
  CHECK_FALSE(sign_if_decidable(pi2 * pi2).has_value());
  CHECK_FALSE(sign_if_decidable(PiScalar(GaussianRational::i())).has_value());
}
