#include "illposed/domain.hpp"

#include <cmath>
#include <sstream>

#include "illposed/errors.hpp"

namespace illposed {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw InvalidArgument("interval requires finite a < b");
}

HalfLineDomain::HalfLineDomain(double s, int panels) : s_max(s), panel_count(panels) {
  if (!std::isfinite(s_max) || !(s_max > 0)) throw InvalidArgument("half-line needs s_max > 0");
  if (panel_count < 1) throw InvalidArgument("half-line needs at least one panel");
}

HalfLineDomain HalfLineDomain::for_laplace(double a) {
  if (!(a > 0)) throw InvalidArgument("half-line truncation needs a > 0");
  return HalfLineDomain(40.0 / a, 8);
}

std::vector<double> HalfLineDomain::breakpoints() const {
  std::vector<double> br{0.0};
  for (int p = 0; p < panel_count; ++p) br.push_back(std::ldexp(s_max, p + 1 - panel_count));
  return br;
}

Interval bounding_interval(const Domain& d) {
  if (const auto* iv = std::get_if<Interval>(&d)) return *iv;
  return std::get<HalfLineDomain>(d).as_interval();
}

std::string describe(const Interval& i) {
  std::ostringstream os;
  os << '[' << i.a << ',' << i.b << ']';
  return os.str();
}

std::string describe(const Domain& d) {
  if (const auto* iv = std::get_if<Interval>(&d)) return describe(*iv);
  const auto& h = std::get<HalfLineDomain>(d);
  std::ostringstream os;
  os << "[0," << h.s_max << "]/" << h.panel_count << " panels";
  return os.str();
}

}  // namespace illposed
