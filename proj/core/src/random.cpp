#include "illposed/random.hpp"

#include <cmath>

namespace illposed {

double Rng::uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

int Rng::integer(int lo, int hi) {
  const auto span = std::uint64_t(hi - lo + 1);
  return lo + int(engine_() % span);
}

}  // namespace illposed
