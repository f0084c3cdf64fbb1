#pragma once

#include <span>
#include <vector>

#include "illposed/domain.hpp"
#include "illposed/errors.hpp"
#include "illposed/numeric.hpp"

namespace illposed {

template <class Real>
struct Nodes {
  std::vector<Real> x;
  std::vector<Real> w;
};

// n-point Gauss-Legendre rule on [-1,1], nodes ascending.
template <class Real>
Nodes<Real> gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
  Nodes<Real> r;
  r.x.assign(n, Real(0));
  r.w.assign(n, Real(0));
  const Real tol = 8 * num::epsilon<Real>();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real z = num::cos(num::pi<Real>() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    if (n % 2 == 1 && i == n / 2) z = 0;
    Real pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p1 = 1, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        Real p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      Real dz = p1 / pp;
      z -= dz;
      if (num::abs(dz) <= tol) break;
    }
    if (n % 2 == 1 && i == n / 2) z = 0;
    // one more derivative evaluation at the converged node
    Real p1 = 1, p2 = 0;
    for (int j = 1; j <= n; ++j) {
      Real p3 = p2;
      p2 = p1;
      p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
    }
    pp = n * (z * p1 - p2) / (z * z - 1);
    Real w = 2 / ((1 - z * z) * pp * pp);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

template <class Real>
void append_panel(Nodes<Real>& out, const Nodes<Real>& ref, Real lo, Real hi) {
  Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
  for (std::size_t k = 0; k < ref.x.size(); ++k) {
    out.x.push_back(mid + half * ref.x[k]);
    out.w.push_back(half * ref.w[k]);
  }
}

// Nodes and weights for a domain; half-line domains get n nodes spread over
// the panels, the surplus going to the outermost panels.
template <class Real>
Nodes<Real> quadrature_nodes(const Domain& domain, int n) {
  if (n < 1) throw InvalidArgument("make_grid: n must be positive");
  Nodes<Real> out;
  if (const auto* iv = std::get_if<Interval>(&domain)) {
    append_panel(out, gauss_legendre<Real>(n), Real(iv->a), Real(iv->b));
    return out;
  }
  const auto& half = std::get<HalfLineDomain>(domain);
  const int panels = half.panel_count;
  if (n < panels) throw InvalidArgument("make_grid: half-line grid needs at least one node per panel");
  const Real s_max = half.s_max;
  const int per = n / panels, extra = n % panels;
  Real lo = 0;
  for (int p = 0; p < panels; ++p) {
    Real hi = s_max;
    for (int k = p; k < panels - 1; ++k) hi /= 2;
    int count = per + (p >= panels - extra ? 1 : 0);
    append_panel(out, gauss_legendre<Real>(count), lo, hi);
    lo = hi;
  }
  return out;
}

class QuadGrid {
 public:
  QuadGrid(Domain domain, std::vector<double> nodes, std::vector<double> weights);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const Domain& domain() const { return domain_; }
  std::size_t size() const { return nodes_.size(); }
  double integrate(std::span<const double> values) const;

 private:
  Domain domain_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

QuadGrid make_grid(const Domain& domain, int n);

}  // namespace illposed
