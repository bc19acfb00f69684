#pragma once

// Spectral bookkeeping for flat tori: enumerating dual-lattice vectors of a
// given norm, tabulating the Laplace spectrum, and classifying which
// combinations of characters in one eigenspace satisfy the full eigenfamily
// equations (answer: exactly the one-dimensional spans of single
// characters, which classify_shell re-derives by exhaustion and seeded
// sampling).

#include <eigenkit/lattice.hpp>
#include <eigenkit/report.hpp>
#include <eigenkit/rng.hpp>
#include <eigenkit/trigpoly.hpp>

#include <cstdint>
#include <vector>

namespace eigenkit {

// All vectors of the given lattice with <k, k> = q, in integer coordinates
// w.r.t. the lattice basis.  Enumerates the box |c_i| <= sqrt(q * (G^-1)_ii)
// and keeps exact matches; deterministic lexicographic order.
std::vector<FreqVector> norm_shell(const Lattice& lattice, const BigRational& q);

struct SpectrumValue {
  BigRational q;               // eigenvalue of -Laplacian/PI2: |k|^2 over the dual lattice
  std::size_t multiplicity;    // number of dual vectors realizing it
};

// All realized q with 0 <= q <= bound for the torus R^n/lattice, ascending.
std::vector<SpectrumValue> spectrum_up_to(const Lattice& torus, const BigRational& bound);

struct ShellClassification {
  BigRational q;
  std::vector<FreqVector> shell;            // dual vectors with |k|^2 = q
  std::vector<FreqVector> span_generators;  // shell vectors whose span survives
  std::size_t pairs_checked = 0;
  std::size_t pairs_rejected = 0;
  std::size_t combos_checked = 0;
  std::size_t combos_rejected = 0;
  VerificationReport report;
  bool pass = false;
};

// For eigenvalue -q*PI2 of the torus: verifies each single character spans an
// eigenfamily, that every two-character family fails the mixed equation, and
// that seeded multi-term combinations fail the eigenfunction equations.
// Throws std::invalid_argument when the shell is empty (q not realized).
ShellClassification classify_shell(const Lattice& torus, const BigRational& q,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace eigenkit
