#include <eigenkit/matrix.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eigenkit {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = BigRational(m.at(i, j));
  return out;
}

namespace {

// Working copy as vector-of-rows so pivoting swaps row handles, not entries.
std::vector<std::vector<BigInt>> copy_rows(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

void require_square(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix must be square");
}

}  // namespace

BigInt det_bareiss_serial(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  auto a = copy_rows(m);
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return BigInt(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // One-step Bareiss update; the division by the previous pivot is exact.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt det_bareiss(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  auto a = copy_rows(m);
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return BigInt(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    const std::vector<BigInt>& pivot_row = a[k];
    const BigInt& pivot = pivot_row[k];
    // Rows below the pivot update independently; GMP values are per-cell, so
    // the iterations share nothing but read-only pivot data.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) + 1;
         i < static_cast<std::ptrdiff_t>(n); ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const BigInt head = row[k];
      for (std::size_t j = k + 1; j < n; ++j) {
        row[j] = (row[j] * pivot - head * pivot_row[j]) / prev;
      }
      row[k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<std::vector<BigRational>> kernel_basis(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Reduced row echelon form with exact rational pivots.
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const BigRational inv_p = BigRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv_p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<BigRational>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[free_c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_c];
    // Normalize: first nonzero entry becomes 1.
    for (const auto& x : v) {
      if (x != 0) {
        const BigRational inv = BigRational(1) / x;
        for (auto& y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[piv], a[c]);
    const BigRational inv_p = BigRational(1) / a[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) a[c][j] *= inv_p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const BigRational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
  return out;
}

}  // namespace eigenkit
