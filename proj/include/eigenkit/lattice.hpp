#pragma once

// Full-rank lattices in R^n with exact rational basis vectors (stored as the
// rows of a matrix).  The Gram matrix and its inverse are precomputed; the
// dual lattice has basis (B^-1)^T, so its Gram matrix is the inverse Gram.

#include <eigenkit/matrix.hpp>

#include <string>
#include <string_view>

namespace eigenkit {

class Lattice {
 public:
  // Throws std::invalid_argument for non-square or singular bases.
  explicit Lattice(RatMatrix basis);

  static Lattice standard(unsigned n);  // Z^n

  // "1,0;1/2,1" -> rows (1,0) and (1/2,1).
  static Lattice parse(std::string_view text);

  unsigned dim() const { return static_cast<unsigned>(basis_.rows()); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& gram() const { return gram_; }
  const RatMatrix& dual_gram() const { return dual_gram_; }

  // <u, v> for vectors given in integer coordinates w.r.t. this basis.
  BigRational inner(const std::vector<long>& u, const std::vector<long>& v) const;
  BigRational norm_squared(const std::vector<long>& u) const { return inner(u, u); }

  std::string str() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  RatMatrix basis_;
  RatMatrix gram_;
  RatMatrix dual_gram_;
};

Lattice dual_lattice(const Lattice& l);

}  // namespace eigenkit
