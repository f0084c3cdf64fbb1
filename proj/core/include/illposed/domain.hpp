#pragma once

#include <string>
#include <variant>
#include <vector>

namespace illposed {

struct Interval {
  double a;
  double b;

  Interval(double a, double b);
  double length() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
  bool contains(double x) const { return x >= a && x <= b; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// [0, s_max] split into panels whose breakpoints halve toward the origin.
struct HalfLineDomain {
  double s_max;
  int panel_count;

  HalfLineDomain(double s_max, int panel_count = 8);
  static HalfLineDomain for_laplace(double a);
  std::vector<double> breakpoints() const;
  Interval as_interval() const { return Interval(0.0, s_max); }
  friend bool operator==(const HalfLineDomain&, const HalfLineDomain&) = default;
};

using Domain = std::variant<Interval, HalfLineDomain>;

Interval bounding_interval(const Domain& d);
std::string describe(const Interval& i);
std::string describe(const Domain& d);

}  // namespace illposed
