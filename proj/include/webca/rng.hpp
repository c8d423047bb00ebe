#pragma once

#include <cstdint>

namespace webca {

// splitmix64 (Steele/Lea/Flood mixing constants). All stochastic code in the
// project runs on this generator so results are bit-reproducible across
// platforms. Substreams are derived by counter splitting: stream(seed, i)
// mixes the trial index into the seed before the first output, so trial i's
// stream does not depend on how many draws other trials made.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    return mix(state);
  }

  // value in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  bool bit() { return next() >> 63; }

  double unit() { return (next() >> 11) * 0x1.0p-53; }
};

inline SplitMix64 substream(uint64_t seed, uint64_t index) {
  return SplitMix64(SplitMix64::mix(seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x7f4a7c159e3779b9ULL)));
}

// Stateless cell sampler: the value of cell x in trial i depends only on
// (seed, i, x), so widening the sampled window never changes earlier cells.
inline bool random_cell_bit(uint64_t seed, uint64_t trial, int64_t x) {
  uint64_t h = SplitMix64::mix(seed ^ (trial * 0xd1342543de82ef95ULL));
  h = SplitMix64::mix(h ^ (static_cast<uint64_t>(x) * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL));
  return h >> 63;
}

inline const char* kRngAlgorithm = "splitmix64-counter";

} // namespace webca
