#pragma once

// Binomial coefficient matrices A(n) and B(n), their determinant identities,
// the rational kernel vector of the rectangular B(2n), the generating
// polynomials whose coefficients fill the rows, and the recurrences and
// derivative evaluations that support those identities.

#include <eigenkit/bigint.hpp>
#include <eigenkit/intpoly.hpp>
#include <eigenkit/matrix.hpp>
#include <eigenkit/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace eigenkit::combi {

enum class MatrixFamily { A, BSquare, BRect };

std::string family_name(MatrixFamily f);

// Row l, column m of the two families:
//   a-entry: sum_k C(l, 2k) * C(n-l, 2(m-k)+1)
//   b-entry: sum_k C(l, 2k) * C(n-l, 2(m-k))
BigInt a_entry(unsigned n, unsigned l, unsigned m);
BigInt b_entry(unsigned n, unsigned l, unsigned m);

// A(n): square, size floor((n+1)/2), rows l = 0..floor((n-1)/2),
//       columns m = 0..floor((n-1)/2).
// BSquare(n): square, size floor(n/2)+1, rows/columns 0..floor(n/2).
// BRect(n): defined for even n = 2k only; k rows (l = 0..k-1) and k+1
//       columns (m = 0..k), the shape whose kernel is one-dimensional.
IntMatrix build_matrix(MatrixFamily f, unsigned n);

// Closed-form determinant (A and BSquare only): a signed power of two.
BigInt predicted_det(MatrixFamily f, unsigned n);

// Same value obtained by the two-step row-reduction chain
//   det A(2k)   =        2^k     * det A(2k-1)
//   det A(2k+1) = (-1)^k 2^(k-1) * det A(2k)
// anchored at det A(1) = 1, det A(2) = 2, with BSquare folded in via
//   det B(2k) = (-1)^k/2 * det A(2k),  det B(2k-1) = det A(2k-1).
// Independent of Bareiss elimination.
BigInt det_via_row_reduction(MatrixFamily f, unsigned n);

VerificationReport verify_det(MatrixFamily f, unsigned n);

// v_m = (-1)^m C(n, m) / C(2n, 2m), m = 0..n; the kernel vector of BRect(2n).
std::vector<BigRational> kernel_vector(unsigned n);

// Checks BRect(2n) v = 0 and that the kernel is exactly one-dimensional.
VerificationReport verify_kernel(unsigned n);

enum class PolyKind { P, Alpha, Beta };

// A generating polynomial computed two ways: from the matrix entries
// (definition) and from the closed-form product/sum of (1 +- t)^k factors.
struct GenPoly {
  IntPoly from_definition;
  IntPoly from_closed_form;
  bool equal = false;
};

// P and Alpha share coefficients 4*a_entry(n,l,m) on odd powers t^(2m+1);
// Beta has 4*b_entry(n,l,m) on even powers t^(2m).  Closed forms:
//   P     = ((1+t)^l + (1-t)^l) * ((1+t)^(n-l) - (1-t)^(n-l))
//   Alpha = (1+t)^n - (1-t)^n - (1+t)^l (1-t)^(n-l) + (1+t)^(n-l) (1-t)^l
//   Beta  = (1+t)^n + (1-t)^n + (1+t)^l (1-t)^(n-l) + (1+t)^(n-l) (1-t)^l
GenPoly gen_poly(PolyKind kind, unsigned l, unsigned n);

// The four recurrences tying rows of A and B together, checked for all
// applicable l at this n (rows compared with zero-padding):
//   R1: a_0(n) = a_l(n) + a_(n-l)(n)
//   R2: a_(l+1)(n+1) = 2 (-1)^l sum_(j<=l) (-1)^j a_j(n) + correction
//       (correction: -a_0(n) for even l, +a_0(n+1) for odd l)
//   R3: a_1(n+1) = a_0(n)
//   R4: b_l(n) = a_l(n+1) - a_l(n)
VerificationReport verify_recurrences(unsigned n);

// k-th derivative of a generating polynomial at t = 1, next to the value the
// derivative lemma predicts for that (n, l, k).  `guard` names which case of
// the lemma applied ("l=0", "k<l", "k=l"); when none applies, predicted is
// empty and the evaluation is reported as-is.
struct DerivativeCase {
  BigInt computed;
  std::optional<BigInt> predicted;
  std::string guard;
};

// Alpha case (rows of A(n), so l <= floor((n-1)/2)):
//   l=0, k<n : n!/(n-k)! * 2^(n-k+1)
//   k<l      : n!/(n-k)! * 2^(n-k)
//   k=l>=1   : (n!/(n-k)! + (-1)^k k!) * 2^(n-k)
DerivativeCase alpha_derivative_case(unsigned n, unsigned l, unsigned k);

// Beta case for B(2n) (rows l <= n-1); same shape with n replaced by 2n.
DerivativeCase beta_derivative_case(unsigned n, unsigned l, unsigned k);

// Rational combinations of the rows of A(n) that realize each unit monomial
// direction: witnesses[k] is the row-space element representing t^(2k+1)
// (normalized), for k = 0..floor((n-1)/2).  structure_ok confirms the
// expected shape: entry l > k equals 1, entry k equals 1 + (-1)^k / C(n,k),
// entry 0 equals 2; entries 0 < l < k are unconstrained.
struct SurjectivityWitnesses {
  std::vector<std::vector<BigRational>> vectors;
  bool structure_ok = true;
  std::vector<std::string> violations;
};

SurjectivityWitnesses surjectivity_witnesses(unsigned n);

// Coefficient vector c with A(n) c = witnesses[k]: the k-th witness is an
// explicit image point, c_m = norm * 4 * (2m+1)(2m)...(2m+2-k).
std::vector<BigRational> surjectivity_preimage(unsigned n, unsigned k);

}  // namespace eigenkit::combi
