#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace heegaard {

// splitmix64, used to derive independent per-trial seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d9b14a12f38d69ULL;
  return x ^ (x >> 31);
}

// Seeded generator.  Draws go through our own rejection sampling so that
// streams are reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static const char* name() { return "mt19937_64"; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, n), n >= 1.
  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

// Seed for trial `index` of a run seeded with `master`.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

}  // namespace heegaard
