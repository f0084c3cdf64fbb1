#include <cmath>

#include <gtest/gtest.h>

#include "illposed/adversarial.hpp"
#include "illposed/errors.hpp"
#include "illposed/norms.hpp"

using namespace illposed;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST(Gramian, HilbertSmallestEigenvalues) {
  const Interval I(0, 1);
  const auto op = make_hilbert(I, Interval(2, 3));
  const QuadGrid grid = make_grid(I, 256);
  const std::pair<int, double> oracle[] = {{1, 0.022528471426073986},
                                           {3, 2.3488821539987111e-9},
                                           {8, 1.467363668688681e-27},
                                           {12, 3.2526129847529542e-42}};
  for (auto [n, v] : oracle) {
    const GramianReport g = build_gramian(op, make_basis("sine", I, n), grid);
    EXPECT_LT(rel(g.min_eigenvalue, v), 1e-8) << "n=" << n;
    EXPECT_NEAR(g.minimizer.norm(), 1.0, 1e-14);
  }
}

TEST(Gramian, RatioDecreasesAsTheSubspaceGrows) {
  const Interval ab(1, 2);
  const QuadGrid grid = make_grid(ab, 128);
  double prev = INFINITY;
  for (int n = 1; n <= 8; ++n) {
    const double v = build_gramian(make_laplace(1, 2), make_basis("legendre", ab, n), grid).min_eigenvalue;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Gramian, WorstFunctionIsUnitNorm) {
  const Interval ab(1, 2);
  const QuadGrid grid = make_grid(ab, 128);
  const GramianReport g = build_gramian(make_laplace(1, 2), make_basis("sine", ab, 5), grid);
  const FunctionRep w = worst_function(g);
  EXPECT_NEAR(l2_norm(w, grid), 1.0, 1e-12);
  EXPECT_LT(rel(quadratic_form(gram_matrix(make_laplace(1, 2), grid), w), g.min_eigenvalue), 1e-6);
}

TEST(Gramian, RejectsNonOrthonormalBasis) {
  const Interval ab(0, 1);
  const std::vector<FunctionRep> basis{FunctionRep::sine_series(ab, {1.0}), FunctionRep::sine_series(ab, {0.0, 1.0})};
  EXPECT_THROW(build_gramian(make_hilbert(ab, Interval(2, 3)), basis, make_grid(ab, 64)), InvalidArgument);
  EXPECT_THROW(make_basis("haar", ab, 3), InvalidArgument);
}

TEST(Figures, PrintedCoefficientRatios) {
  const double oracle[] = {0.0025971581714774919, 6.6227894998518377e-8, 2.1683344949988917e-12};
  for (int id = 1; id <= 3; ++id) {
    const FigureResult r = reproduce_figure(builtin_figure(id), 256);
    EXPECT_LT(rel(r.computed_ratio, oracle[id - 1]), 1e-6) << "figure " << id;
  }
}

TEST(Figures, SubspaceMinimaAreFarBelowPrintedRatios) {
  const FigureResult f1 = reproduce_figure(builtin_figure(1), 256);
  EXPECT_LT(f1.subspace_min_ratio, 1e-7 * 30);
  // the minimizer matches the printed coefficients up to one sign
  EXPECT_NEAR(std::abs(f1.subspace_minimizer[1]), 0.4830, 5e-4);
  const FigureResult f3 = reproduce_figure(builtin_figure(3), 256);
  EXPECT_LT(rel(f3.subspace_min_ratio, 4.5469379875564425e-19), 1e-5);
  const FigureResult f2 = reproduce_figure(builtin_figure(2), 256);
  EXPECT_TRUE(f2.pass);
}
