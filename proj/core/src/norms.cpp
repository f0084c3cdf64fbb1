#include "illposed/norms.hpp"

#include <cmath>

#include "illposed/errors.hpp"

namespace illposed {

bool same_support(const FunctionRep& f, const Domain& d) {
  if (const auto* iv = std::get_if<Interval>(&d)) return f.domain() == *iv;
  return f.domain() == std::get<HalfLineDomain>(d).as_interval();
}

std::vector<double> sample(const FunctionRep& f, const QuadGrid& grid) {
  if (f.empty()) throw InvalidArgument("function has an empty payload");
  if (!same_support(f, grid.domain()))
    throw InvalidArgument("function domain " + describe(f.domain()) + " does not match grid " +
                          describe(grid.domain()));
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.nodes()[i]);
  return v;
}

double inner_product(const FunctionRep& f, const FunctionRep& g, const QuadGrid& grid) {
  if (!(f.domain() == g.domain())) throw InvalidArgument("inner_product: domain mismatch");
  const auto fv = sample(f, grid), gv = sample(g, grid);
  num::CompensatedSum<double> s;
  for (std::size_t i = 0; i < fv.size(); ++i) s.add(grid.weights()[i] * fv[i] * gv[i]);
  return s.value();
}

double l2_norm(const FunctionRep& f, const QuadGrid& grid) {
  const auto v = sample(f, grid);
  num::CompensatedSum<double> s;
  for (std::size_t i = 0; i < v.size(); ++i) s.add(grid.weights()[i] * v[i] * v[i]);
  return std::sqrt(std::max(0.0, s.value()));
}

double h1_seminorm(const FunctionRep& f, const QuadGrid& grid) {
  if (f.empty()) throw InvalidArgument("function has an empty payload");
  return l2_norm(f.derivative(), grid);
}

double weighted_norm(const FunctionRep& f, const QuadGrid& grid, int weight_power,
                     int derivative_order) {
  if (weight_power < 0 || weight_power > 1) throw InvalidArgument("weight_power must be 0 or 1");
  if (derivative_order < 0 || derivative_order > 2)
    throw InvalidArgument("derivative_order must be 0, 1 or 2");
  if (f.empty()) throw InvalidArgument("function has an empty payload");
  FunctionRep g = f;
  for (int k = 0; k < derivative_order; ++k) g = g.derivative();
  const auto v = sample(g, grid);
  num::CompensatedSum<double> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = weight_power == 1 ? grid.nodes()[i] : 1.0;
    s.add(grid.weights()[i] * x * x * v[i] * v[i]);
  }
  return std::sqrt(std::max(0.0, s.value()));
}

double weighted_aggregate(const FunctionRep& f, const QuadGrid& grid) {
  return weighted_norm(f, grid, 1, 2) + weighted_norm(f, grid, 1, 1) +
         weighted_norm(f, grid, 1, 0) + weighted_norm(f, grid, 0, 0);
}

}  // namespace illposed
