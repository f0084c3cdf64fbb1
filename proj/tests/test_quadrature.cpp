#include <cmath>

#include <gtest/gtest.h>

#include "illposed/errors.hpp"
#include "illposed/quadrature.hpp"

using namespace illposed;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto r = gauss_legendre<double>(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += r.w[k] * std::pow(r.x[k], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      EXPECT_NEAR(s, exact, 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, NodesAscendingAndSymmetric) {
  const auto r = gauss_legendre<double>(33);
  for (int k = 0; k + 1 < 33; ++k) EXPECT_LT(r.x[k], r.x[k + 1]);
  for (int k = 0; k < 33; ++k) {
    EXPECT_EQ(r.x[k], -r.x[32 - k]);
    EXPECT_EQ(r.w[k], r.w[32 - k]);
  }
  EXPECT_EQ(r.x[16], 0.0);
}

TEST(GaussLegendre, QuadPrecisionWeightsSumToTwo) {
  const auto r = gauss_legendre<num::quad>(40);
  num::quad s = 0;
  for (const auto& w : r.w) s += w;
  EXPECT_LT(double(num::abs(s - 2)), 1e-30);
  num::quad m4 = 0;
  for (int k = 0; k < 40; ++k) m4 += r.w[k] * r.x[k] * r.x[k] * r.x[k] * r.x[k];
  EXPECT_LT(double(num::abs(m4 - num::quad(2) / 5)), 1e-30);
}

TEST(QuadGrid, IntervalIntegratesExponential) {
  const QuadGrid g = make_grid(Interval(1, 2), 32);
  std::vector<double> v;
  for (double x : g.nodes()) v.push_back(std::exp(-x));
  EXPECT_NEAR(g.integrate(v), std::exp(-1.0) - std::exp(-2.0), 1e-15);
}

TEST(QuadGrid, HalfLinePanelsHalveTowardZero) {
  const HalfLineDomain half = HalfLineDomain::for_laplace(1.0);
  EXPECT_DOUBLE_EQ(half.s_max, 40.0);
  const auto bp = half.breakpoints();
  ASSERT_EQ(bp.size(), 9u);
  EXPECT_DOUBLE_EQ(bp.front(), 0.0);
  EXPECT_DOUBLE_EQ(bp.back(), 40.0);
  EXPECT_DOUBLE_EQ(bp[7], 20.0);
  const QuadGrid g = make_grid(half, 256);
  EXPECT_EQ(g.size(), 256u);
  std::vector<double> v;
  for (double x : g.nodes()) v.push_back(std::exp(-x));
  EXPECT_NEAR(g.integrate(v), 1.0 - std::exp(-40.0), 1e-13);
}

TEST(QuadGrid, RejectsInvalidInput) {
  EXPECT_THROW(make_grid(Interval(0, 1), 0), InvalidArgument);
  EXPECT_THROW(Interval(2, 1), InvalidArgument);
  EXPECT_THROW(QuadGrid(Interval(0, 1), {0.5, 2.0}, {0.5, 0.5}), InvalidArgument);
  EXPECT_THROW(QuadGrid(Interval(0, 1), {0.2, 0.8}, {0.5, -0.5}), InvalidArgument);
}
