#pragma once

#include <cstdint>

namespace frobdeg {

// Splittable deterministic generator (splitmix64). All randomness in the
// library flows through explicitly passed handles: same seed, same stream,
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive. Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Derive an independent child generator.
  Rng split() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace frobdeg
