#include <cmath>

#include <gtest/gtest.h>

#include "illposed/function_rep.hpp"
#include "illposed/norms.hpp"
#include "illposed/quadrature.hpp"

using namespace illposed;

TEST(FunctionRep, MappedAndRawSineAgreeOnUnitInterval) {
  const auto mapped = FunctionRep::sine_series(Interval(0, 1), {0.5, -1.0, 0.25});
  const auto raw = FunctionRep::sine_series(Interval(0, 1), {0.5, -1.0, 0.25}, BasisConvention::Raw);
  for (double x : {0.0, 0.1, 0.37, 0.9}) EXPECT_NEAR(mapped(x), raw(x), 1e-15);
}

TEST(FunctionRep, DerivativesAreExact) {
  const Interval ab(1, 2);
  const auto s = FunctionRep::sine_series(ab, {0.0, 2.0});
  EXPECT_NEAR(s.derivative()(1.3), 2.0 * 2 * M_PI * std::cos(2 * M_PI * 0.3), 1e-13);
  const auto c = FunctionRep::cosine_series(Interval(-1, 1), {1.0, 0.0, 3.0}, BasisConvention::Raw);
  EXPECT_NEAR(c.derivative()(0.4), -3.0 * 2 * M_PI * std::sin(2 * M_PI * 0.4), 1e-13);
  // sqrt(3/2) P_1 on [-1,1] is sqrt(3/2) x
  const auto l = FunctionRep::legendre_series(Interval(-1, 1), {0.0, 1.0});
  EXPECT_NEAR(l.derivative()(0.3), std::sqrt(1.5), 1e-14);
  const auto g = FunctionRep::laguerre_series(40.0, 1.5, {1.0});
  EXPECT_NEAR(g.derivative()(0.7), -1.5 * std::sqrt(3.0) * std::exp(-1.05), 1e-14);
}

TEST(FunctionRep, ChebyshevSamplesReproducePolynomials) {
  const Interval ab(-0.5, 2.0);
  const auto f = FunctionRep::from_callable(ab, 9, [](double x) { return x * x * x - 2 * x + 1; });
  for (double x : {-0.5, -0.1, 0.75, 1.3, 2.0}) EXPECT_NEAR(f(x), x * x * x - 2 * x + 1, 1e-13);
  EXPECT_NEAR(f.derivative()(0.75), 3 * 0.5625 - 2, 1e-12);
  const auto pts = FunctionRep::chebyshev_points(ab, 9);
  EXPECT_DOUBLE_EQ(pts.front(), -0.5);
  EXPECT_DOUBLE_EQ(pts.back(), 2.0);
  EXPECT_DOUBLE_EQ(pts[4], 0.75);
}

TEST(FunctionRep, LegendreAndLaguerreAreOrthonormal) {
  const QuadGrid g = make_grid(Interval(1, 3), 64);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<double> ci(i + 1, 0.0), cj(j + 1, 0.0);
      ci[i] = cj[j] = 1.0;
      const double ip = inner_product(FunctionRep::legendre_series(Interval(1, 3), ci),
                                      FunctionRep::legendre_series(Interval(1, 3), cj), g);
      EXPECT_NEAR(ip, i == j ? 1.0 : 0.0, 1e-13);
    }
  const QuadGrid h = make_grid(HalfLineDomain::for_laplace(1.0), 512);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<double> ci(i + 1, 0.0), cj(j + 1, 0.0);
      ci[i] = cj[j] = 1.0;
      const double ip = inner_product(FunctionRep::laguerre_series(40, 1.0, ci),
                                      FunctionRep::laguerre_series(40, 1.0, cj), h);
      EXPECT_NEAR(ip, i == j ? 1.0 : 0.0, 1e-12);
    }
}

TEST(FunctionRep, JsonRoundTrip) {
  const auto f = FunctionRep::cosine_series(Interval(-1, 1), {0.1, 0.2, 0.3}, BasisConvention::Raw);
  const auto g = FunctionRep::from_json(nlohmann::json::parse(f.to_json().dump()));
  EXPECT_EQ(g.kind(), RepKind::CosineSeries);
  EXPECT_EQ(g.convention(), BasisConvention::Raw);
  EXPECT_EQ(g.payload(), f.payload());
  EXPECT_EQ(g(0.3), f(0.3));
}

TEST(FunctionRep, PlusAndScaled) {
  const Interval ab(0, 1);
  const auto f = FunctionRep::sine_series(ab, {1.0});
  const auto g = FunctionRep::sine_series(ab, {0.0, 0.0, 2.0});
  const auto h = f.plus(g).scaled(3.0);
  EXPECT_NEAR(h(0.2), 3 * (std::sin(M_PI * 0.2) + 2 * std::sin(3 * M_PI * 0.2)), 1e-14);
}

TEST(Norms, ClosedFormValues) {
  const Interval ab(0, 2);
  const auto f = FunctionRep::sine_series(ab, {0.0, 1.0});  // sin(pi x)
  const QuadGrid g = make_grid(ab, 64);
  EXPECT_NEAR(l2_norm(f, g), 1.0, 1e-14);
  EXPECT_NEAR(h1_seminorm(f, g), M_PI, 1e-13);
  // f = e^{-t}: ||f|| = 1/sqrt2, ||t f|| = 1/2, ||t f'|| = 1/2, ||t f''|| = 1/2
  const auto e = FunctionRep::laguerre_series(40, 1.0, {1.0 / std::sqrt(2.0)});
  const QuadGrid h = make_grid(HalfLineDomain::for_laplace(1.0), 512);
  EXPECT_NEAR(weighted_aggregate(e, h), 1.5 + 1 / std::sqrt(2.0), 1e-12);
}
