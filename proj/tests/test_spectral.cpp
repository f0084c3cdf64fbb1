#include <cmath>

#include <gtest/gtest.h>

#include "illposed/errors.hpp"
#include "illposed/spectral.hpp"

using namespace illposed;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

OperatorMatrix laplace_matrix(int n = 256) { return gram_matrix(make_laplace(1, 2), make_grid(Interval(1, 2), n)); }
OperatorMatrix fourier_matrix(int n = 256) { return gram_matrix(make_fourier(), make_grid(Interval(-1, 1), n)); }
}  // namespace

TEST(Spectral, LaplaceSpectrumThroughCommutingOperator) {
  const auto spec = commuting_spectrum(laplace_matrix(), assemble_bertero_grunbaum(Interval(1, 2), 128), 30);
  const std::pair<int, double> oracle[] = {{1, 0.34317880265063988},     {2, 0.0033681401752896612},
                                           {5, 1.4972436990143037e-9},   {10, 3.3312289103976808e-20},
                                           {20, 1.5767927308645129e-41}, {30, 7.395634569976959e-63}};
  for (auto [n, mu] : oracle) EXPECT_LT(rel(spec.eigenvalues[n - 1], mu), 1e-9) << "n=" << n;
}

TEST(Spectral, FourierSpectrumThroughCommutingOperator) {
  const auto spec = commuting_spectrum(fourier_matrix(), assemble_prolate(128), 20);
  const std::pair<int, double> oracle[] = {{1, 3.5976374312627475},     {2, 0.39452921115709627},
                                           {5, 2.3360434089180591e-7},  {10, 1.0346027376557476e-21},
                                           {20, 8.6037544747629036e-57}};
  for (auto [n, mu] : oracle) EXPECT_LT(rel(spec.eigenvalues[n - 1], mu), 1e-9) << "n=" << n;
}

TEST(Spectral, DirectSolverAgreesOnLeadingModes) {
  const auto m = laplace_matrix();
  const auto direct = eig_sym(m.entries, SpectrumOrder::DescendingIntegral, "laplace");
  const auto chain = commuting_spectrum(m, assemble_bertero_grunbaum(Interval(1, 2), 128), 4);
  for (int k = 0; k < 4; ++k) EXPECT_LT(rel(direct.eigenvalues[k], chain.eigenvalues[k]), 1e-6);
  for (int k = 1; k < direct.eigenvalues.size(); ++k) EXPECT_LE(direct.eigenvalues[k], direct.eigenvalues[k - 1]);
}

TEST(Spectral, EigenfunctionsMatchForCommutingPairs) {
  for (auto [mat, diff] : {std::pair{laplace_matrix(), assemble_bertero_grunbaum(Interval(1, 2), 128)},
                           std::pair{fourier_matrix(), assemble_prolate(128)}}) {
    const MatchReport r = match_eigenfunctions(mat, diff, 10);
    ASSERT_EQ(r.modes.size(), 10u);
    EXPECT_LT(r.commutation_residual, 1e-10);
    for (const auto& m : r.modes) EXPECT_LT(m.relative_residual, 1e-10) << m.n;
  }
}

TEST(Spectral, MismatchedPairIsDetected) {
  const MatchReport r = match_eigenfunctions(laplace_matrix(), assemble_prolate(128), 5);
  double worst = 0;
  for (const auto& m : r.modes) worst = std::max(worst, m.relative_residual);
  EXPECT_GT(std::max(worst, r.commutation_residual), 1e-4);
}

TEST(Spectral, MatchRejectsUnconvergedRequests) {
  EXPECT_THROW(match_eigenfunctions(laplace_matrix(64), assemble_bertero_grunbaum(Interval(1, 2), 32), 20, 8),
               RangeError);
}

TEST(Spectral, DecayFitsRecoverSyntheticModels) {
  SpectralDecomposition d;
  d.eigenvalues.resize(30);
  d.relative_floor = 0;
  for (int n = 1; n <= 30; ++n) d.eigenvalues[n - 1] = 3.0 * std::exp(-1.7 * n);
  const DecayFit e = fit_decay(d, DecayModel::ExpDecay, 2, 25);
  EXPECT_NEAR(e.c1, 3.0, 1e-10);
  EXPECT_NEAR(e.c2, 1.7, 1e-12);
  EXPECT_NEAR(e.r_squared, 1.0, 1e-12);
  for (int n = 1; n <= 30; ++n) d.eigenvalues[n - 1] = std::exp(-0.8 * n * std::log(n) + 0.1);
  const DecayFit s = fit_decay(d, DecayModel::SuperExp, 4, 12);
  EXPECT_NEAR(s.slope, -0.8, 1e-12);
  d.eigenvalues.resize(3);
  EXPECT_THROW(fit_decay(d, DecayModel::ExpDecay, 2, 25), InsufficientData);
}

TEST(Spectral, GrowthAndSigns) {
  SpectralDecomposition d;
  d.eigenvalues = Eigen::Vector3d(2.0, 12.0, 45.0);
  EXPECT_DOUBLE_EQ(growth_check(d), 2.0);
  Eigen::MatrixXd v(2, 2);
  v << -3, 1, 1, -2;
  normalize_signs(v);
  EXPECT_GT(v(0, 0), 0);
  EXPECT_GT(v(1, 1), 0);
}

TEST(Spectral, LeastSquaresLine) {
  const LineFit f = least_squares_line({0, 1, 2, 3}, {1, 3, 5, 7});
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
}
