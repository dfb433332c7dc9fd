#pragma once

#include <cstdint>

namespace congest {

// splitmix64: tiny, fast, and identical on every platform we build on.
// Used everywhere randomness is needed so that a (seed, stream id) pair
// fully determines behaviour.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via 128-bit multiply (no modulo bias worth caring
  // about at these ranges, and deterministic).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream from a root seed and a stream id
// (e.g. a node id), so per-node randomness is reproducible in isolation.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  Rng mix(root ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
  return mix.next();
}

}  // namespace congest
