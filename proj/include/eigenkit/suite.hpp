#pragma once

// The full verification suite: eleven numbered criteria, each returning one
// report.  run_full_suite is shared by the CLI `full-suite` task and the
// acceptance test binary, so CI and the command line always agree.

#include <eigenkit/report.hpp>
#include <eigenkit/rng.hpp>

#include <cstdint>
#include <vector>

namespace eigenkit::suite {

struct Options {
  std::uint64_t seed = kDefaultSeed;
};

// Parameterized cone sweep shared with the CLI `cone check` task: seeded
// harmonic polynomials with ambient dimension in [m_lo, m_hi] and degree
// <= max_deg, 50 seeded conical round-trips, and the closed-form (s, d)
// values of the coordinate families.
VerificationReport cone_check(std::uint64_t seed, unsigned m_lo, unsigned m_hi,
                              unsigned max_deg);

VerificationReport criterion_determinants(const Options& opt);        // 1
VerificationReport criterion_kernel(const Options& opt);              // 2
VerificationReport criterion_row_reduction(const Options& opt);       // 3
VerificationReport criterion_polynomials(const Options& opt);         // 4
VerificationReport criterion_sphere_examples(const Options& opt);     // 5
VerificationReport criterion_l2_powers(const Options& opt);           // 6
VerificationReport criterion_l2_family(const Options& opt);           // 7
VerificationReport criterion_torus_classification(const Options& opt);// 8
VerificationReport criterion_spectrum_condition(const Options& opt);  // 9
VerificationReport criterion_cone(const Options& opt);                // 10
VerificationReport criterion_structural(const Options& opt);          // 11

std::vector<VerificationReport> run_full_suite(const Options& opt);

}  // namespace eigenkit::suite
