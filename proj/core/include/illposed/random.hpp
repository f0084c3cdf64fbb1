#pragma once

#include <cstdint>
#include <random>

namespace illposed {

// mt19937_64. uniform() = (next() >> 11) * 2^-53; normal() is Box-Muller on
// two consecutive uniforms, u1 taken as 1 - uniform() so the log is finite,
// returning the cosine branch and caching the sine branch for the next call.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace illposed
