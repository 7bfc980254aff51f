#pragma once

// Deterministic RNG. mt19937_64 is fully specified by the standard, and the
// uniform/normal transforms below avoid the implementation-defined stdlib
// distributions, so streams are reproducible across platforms.

#include <cmath>
#include <cstdint>
#include <random>

#include "casa/tensor.hpp"

namespace casa {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Tensor normal_tensor(std::vector<int> shape, double mean = 0.0, double stddev = 1.0) {
    Tensor t(std::move(shape));
    for (int i = 0; i < t.numel(); ++i) t[i] = mean + stddev * normal();
    return t;
  }

  Tensor uniform_tensor(std::vector<int> shape, double lo, double hi) {
    Tensor t(std::move(shape));
    for (int i = 0; i < t.numel(); ++i) t[i] = uniform(lo, hi);
    return t;
  }

  // Independent substream; insensitive to how much of this stream was consumed.
  Rng child(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream))); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace casa
