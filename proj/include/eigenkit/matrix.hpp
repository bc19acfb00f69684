#pragma once

// Dense matrices over an exact scalar type, plus the determinant and kernel
// routines everything else is built on.  det_bareiss is the OpenMP kernel;
// det_bareiss_serial is the plain reference implementation kept so tests and
// the benchmark can compare the two.

#include <eigenkit/bigint.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace eigenkit {

template <typename T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged initializer");
      for (const auto& v : r) e_.push_back(v);
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in apply");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> e_;  // row-major
};

using IntMatrix = ExactMatrix<BigInt>;
using RatMatrix = ExactMatrix<BigRational>;

RatMatrix to_rational(const IntMatrix& m);

// Fraction-free (one-step Bareiss) determinant with row-swap pivoting.
// All divisions are exact by construction.  The two entry points share the
// same elimination order so their results are bit-identical.
BigInt det_bareiss(const IntMatrix& m);         // row updates run under OpenMP
BigInt det_bareiss_serial(const IntMatrix& m);  // reference kernel, no pragmas

// Basis of the right kernel {v : M v = 0} via reduced row echelon form.
// Each basis vector is normalized to have first nonzero entry 1.
std::vector<std::vector<BigRational>> kernel_basis(const RatMatrix& m);

// Gauss-Jordan inverse; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace eigenkit
