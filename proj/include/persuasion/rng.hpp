#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace persuasion {

// Counter-based deterministic PRNG: stream(seed, index) is a pure function,
// so sample i can be drawn independently of samples 0..i-1 and in parallel.
// Core mixer is SplitMix64 (Steele et al.), a fixed, documented constant set.
class Prng {
 public:
  Prng(std::uint64_t seed, std::uint64_t index)
      : state_(mix(seed ^ 0x9e3779b97f4a7c15ull * (index + 1)) ^ mix(index)) {}
  explicit Prng(std::uint64_t seed) : Prng(seed, 0) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform integer in [0, bound), rejection sampled (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform size-k subset of {0,...,n-1} via partial Fisher-Yates.
  std::vector<int> subset(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(next_below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace persuasion
