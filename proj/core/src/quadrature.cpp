#include "illposed/quadrature.hpp"

#include <numeric>

namespace illposed {

QuadGrid::QuadGrid(Domain domain, std::vector<double> nodes, std::vector<double> weights)
    : domain_(std::move(domain)), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size())
    throw InvalidArgument("grid needs matching, nonempty nodes and weights");
  const Interval box = bounding_interval(domain_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0)) throw InvalidArgument("grid weights must be positive");
    if (!box.contains(nodes_[i])) throw InvalidArgument("grid node outside domain");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw InvalidArgument("grid nodes must increase");
  }
}

double QuadGrid::integrate(std::span<const double> values) const {
  if (values.size() != nodes_.size()) throw InvalidArgument("integrate: size mismatch");
  num::CompensatedSum<double> s;
  for (std::size_t i = 0; i < values.size(); ++i) s.add(weights_[i] * values[i]);
  return s.value();
}

QuadGrid make_grid(const Domain& domain, int n) {
  auto nodes = quadrature_nodes<double>(domain, n);
  return QuadGrid(domain, std::move(nodes.x), std::move(nodes.w));
}

}  // namespace illposed
