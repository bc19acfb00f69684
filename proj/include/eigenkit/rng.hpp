#pragma once

// Deterministic random generation for seeded verification sweeps.  Always
// draw through pick()/pick_long so results depend only on the seed and the
// mt19937_64 stream, never on the standard library's distribution
// implementations.

#include <cstdint>
#include <random>

namespace eigenkit {

inline constexpr std::uint64_t kDefaultSeed = 1729;

using Rng = std::mt19937_64;

// Uniform-ish value in [0, bound); bound must be positive.  The modulo bias
// is irrelevant for generating test cases and keeps results portable.
inline std::uint64_t pick(Rng& rng, std::uint64_t bound) { return rng() % bound; }

// Integer in [lo, hi] inclusive.
inline long pick_long(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(pick(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace eigenkit
