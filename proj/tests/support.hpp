#pragma once

// Test-side oracles, deliberately independent of the library kernels: the
// determinant is recomputed by plain rational Gaussian elimination (no
// fraction-free tricks) and binomials by the Pascal recursion, so agreement
// with the Bareiss path is meaningful.

#include <eigenkit/bigint.hpp>
#include <eigenkit/matrix.hpp>
#include <eigenkit/rng.hpp>

#include <cstddef>
#include <vector>

namespace testsupport {

using eigenkit::BigInt;
using eigenkit::BigRational;

inline BigRational det_reference(const eigenkit::RatMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("det_reference: square matrices only");
  const std::size_t n = input.rows();
  eigenkit::RatMatrix m = input;
  BigRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return BigRational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m.at(row, col) == 0) continue;
      const BigRational f = m.at(row, col) / m.at(col, col);
      for (std::size_t j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
    }
  }
  return det;
}

inline BigInt det_reference(const eigenkit::IntMatrix& m) {
  const BigRational d = det_reference(eigenkit::to_rational(m));
  return eigenkit::numerator(d);  // integer matrix, so the determinant is integral
}

inline BigInt binomial_pascal(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, BigInt(1));
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline eigenkit::IntMatrix random_int_matrix(eigenkit::Rng& rng, std::size_t n, long lo, long hi) {
  eigenkit::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = BigInt(eigenkit::pick_long(rng, lo, hi));
  return m;
}

}  // namespace testsupport
