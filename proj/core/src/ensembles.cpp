#include "illposed/ensembles.hpp"

#include <cmath>

namespace illposed {

namespace {

std::vector<double> decaying_normals(Rng& rng, int terms, int offset) {
  std::vector<double> c(terms);
  for (int k = 0; k < terms; ++k) c[k] = rng.normal() / double(k + offset);
  return c;
}

Interval random_interval(Rng& rng) {
  const double a = rng.uniform(-3.0, 2.0);
  const double len = rng.uniform(0.25, std::min(3.0, 3.0 - a));
  return Interval(a, a + len);
}

}  // namespace

std::vector<FunctionRep> random_sine_series(Rng& rng, int count, const Interval& ab) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i)
    out.push_back(FunctionRep::sine_series(ab, decaying_normals(rng, rng.integer(1, 8), 1)));
  return out;
}

std::vector<FunctionRep> random_legendre_series(Rng& rng, int count, const Interval& ab,
                                                int max_degree) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i)
    out.push_back(FunctionRep::legendre_series(ab, decaying_normals(rng, rng.integer(1, max_degree + 1), 1)));
  return out;
}

std::vector<FunctionRep> random_mean_zero_series(Rng& rng, int count, const Interval& ab,
                                                 int max_degree) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i) {
    std::vector<double> c = decaying_normals(rng, rng.integer(2, max_degree + 1), 1);
    c[0] = 0.0;
    out.push_back(FunctionRep::legendre_series(ab, std::move(c)));
  }
  return out;
}

std::vector<FunctionRep> random_poly_exp(Rng& rng, int count, const HalfLineDomain& half) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i) {
    const double sigma = rng.uniform(1.0, 3.0);
    out.push_back(FunctionRep::laguerre_series(half.s_max, sigma,
                                               decaying_normals(rng, rng.integer(1, 7), 1)));
  }
  return out;
}

std::vector<FunctionRep> random_interval_series(Rng& rng, int count) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i) {
    const Interval iv = random_interval(rng);
    std::vector<double> c(rng.integer(2, 9));
    for (double& x : c) x = rng.normal();
    out.push_back(FunctionRep::legendre_series(iv, std::move(c)));
  }
  return out;
}

std::vector<FunctionRep> random_nonnegative(Rng& rng, int count) {
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i) {
    const Interval iv = random_interval(rng);
    const FunctionRep g = FunctionRep::legendre_series(iv, decaying_normals(rng, rng.integer(1, 7), 1));
    const double delta = rng.uniform() < 0.25 ? 0.0 : rng.uniform(0.0, 0.5);
    // g^2 has degree <= 12, so 33 Chebyshev samples represent it exactly
    out.push_back(FunctionRep::from_callable(iv, 33, [&](double x) {
      const double v = g(x);
      return v * v + delta;
    }));
  }
  return out;
}

}  // namespace illposed
