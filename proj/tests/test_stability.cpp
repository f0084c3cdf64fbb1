#include <cmath>

#include <gtest/gtest.h>

#include "illposed/adversarial.hpp"
#include "illposed/ensembles.hpp"
#include "illposed/errors.hpp"
#include "illposed/norms.hpp"
#include "illposed/stability.hpp"

using namespace illposed;

TEST(Lemma2, ClosedFormExamples) {
  const Interval sym(-1, 1);
  const auto x = FunctionRep::legendre_series(sym, {0.0, std::sqrt(2.0 / 3.0)});
  auto r = verify_lemma2(x, make_grid(sym, 32));
  EXPECT_TRUE(r.applicable);
  EXPECT_NEAR(r.sup_norm, 1.0, 1e-14);
  EXPECT_NEAR(r.bound, 2.0, 1e-14);
  EXPECT_TRUE(r.pass);

  r = verify_lemma2(FunctionRep::legendre_series(sym, {1.0}), make_grid(sym, 32));
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(r.pass);

  const Interval ab(0, 2);
  r = verify_lemma2(FunctionRep::sine_series(ab, {0.0, 1.0}), make_grid(ab, 64));
  EXPECT_TRUE(r.applicable);
  EXPECT_NEAR(r.sup_norm, 1.0, 1e-12);
  EXPECT_NEAR(r.bound, std::sqrt(2.0) * M_PI, 1e-12);
}

TEST(Lemma3, ConstantFollowsTheClosedFormMinimizer) {
  const Interval unit(0, 1);
  EXPECT_NEAR(lemma3_constant(1.0, unit), std::sqrt(std::exp(2.0) / 32), 1e-9);
  EXPECT_NEAR(lemma3_constant(0.2, unit), std::sqrt(std::exp(2.0) * 0.00125), 1e-9);
  EXPECT_NEAR(lemma3_constant(5.0, unit), 0.5, 1e-12);
  const Interval wide(1, 5);
  EXPECT_NEAR(lemma3_constant(3.0, wide), std::sqrt(std::exp(2.0) * 9.0 / 128), 1e-9);
}

TEST(Lemma3, Examples) {
  const Interval unit(0, 1);
  const QuadGrid g = make_grid(unit, 32);
  auto r = verify_lemma3(FunctionRep::legendre_series(unit, {1.0}), g, 1.0);
  EXPECT_NEAR(r.lhs, 1.0, 1e-14);
  EXPECT_TRUE(r.pass);

  const auto sq = FunctionRep::from_callable(unit, 5, [](double x) { return x * x; });
  r = verify_lemma3(sq, g, 1.0);
  EXPECT_NEAR(r.lhs, 1.0 / 3, 1e-14);
  const double ratio = (2 / std::sqrt(3.0)) / (1 / std::sqrt(5.0));
  EXPECT_NEAR(r.rhs, lemma3_constant(1.0, unit) * std::exp(-ratio) / std::sqrt(5.0), 1e-12);
  EXPECT_TRUE(r.pass);

  r = verify_lemma3(FunctionRep::legendre_series(unit, {0.0}), g, 1.0);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.pass);

  EXPECT_THROW(verify_lemma3(FunctionRep::sine_series(unit, {0.0, 1.0}), g, 1.0), InvalidArgument);
}

TEST(Lemma1, FirstEigenfunctionCarriesAllMass) {
  const auto op = assemble_bertero_grunbaum(Interval(1, 2), 64);
  const auto dec = diff_spectrum(op);
  const int conv = converged_mode_count(op.spec, 64);
  const auto u1 = op.basis.to_function(dec.eigenvectors.col(0));
  const Lemma1Result r = verify_lemma1(u1, op, dec, conv, 10.0);
  EXPECT_GE(r.threshold_index, 1);
  EXPECT_NEAR(r.low_freq_mass, 1.0, 1e-10);
  EXPECT_TRUE(r.pass);
}

TEST(StabilityFit, RecoversSyntheticConstants) {
  std::vector<double> h, y, yp;
  for (int k = 1; k <= 10; ++k) {
    h.push_back(0.5 * k);
    y.push_back(std::log(2.0) - 3.0 * 0.5 * k);
    yp.push_back(std::log(1.5) - 0.7 * 0.5 * k * std::log(0.7 * 0.5 * k));
  }
  const StabilityFit e = fit_stability_model(h, y, StabilityForm::Exponential);
  EXPECT_NEAR(e.c1, 2.0, 1e-12);
  EXPECT_NEAR(e.c2, 3.0, 1e-12);
  const StabilityFit p = fit_stability_model(h, yp, StabilityForm::PowerOfRatio);
  EXPECT_NEAR(p.c1, 1.5, 1e-6);
  EXPECT_NEAR(p.c2, 0.7, 1e-6);
  EXPECT_GT(p.r_squared, 1 - 1e-10);
  EXPECT_THROW(fit_stability_model({1.0, 2.0}, {0.0, -1.0}, StabilityForm::Exponential), InsufficientData);
}

TEST(StabilityFit, LaplaceSweepIsWellFitted) {
  const auto fit = fit_constants(make_laplace(1, 2), assemble_bertero_grunbaum(Interval(1, 2), 128), 12);
  EXPECT_GT(fit.c1, 0);
  EXPECT_GT(fit.c2, 0);
  EXPECT_GE(fit.r_squared, 0.95);
  const auto fourier = fit_constants(make_fourier(), assemble_prolate(128), 12);
  EXPECT_EQ(fourier.form, StabilityForm::PowerOfRatio);
  EXPECT_GE(fourier.r_squared, 0.90);
}

TEST(Theorems, FittingEigenfunctionsThemselvesSatisfyTheRelaxedBound) {
  const Interval ab(1, 2);
  const auto bg = assemble_bertero_grunbaum(ab, 128);
  const auto fit = fit_constants(make_laplace(1, 2), bg, 12);
  const auto dec = diff_spectrum(bg);
  std::vector<FunctionRep> eig;
  for (int k = 0; k < 12; ++k) eig.push_back(bg.basis.to_function(dec.eigenvectors.col(k)));
  EXPECT_EQ(violation_count(verify_theorem(make_laplace(1, 2), fit, eig)), 0);
}

TEST(Theorems, FigureThreeFunctionIsSatisfied) {
  const auto fit = fit_constants(make_fourier(), assemble_prolate(128), 12);
  const std::vector<FunctionRep> f{figure_function(builtin_figure(3))};
  const auto rec = verify_theorem(make_fourier(), fit, f);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_FALSE(rec[0].error);
  EXPECT_TRUE(rec[0].satisfied);
  EXPECT_GT(rec[0].h1_ratio, 10.0);
}

TEST(Theorems, VerdictsAreScaleInvariant) {
  Rng rng(11);
  const Interval ab(1, 2);
  const auto fit = fit_constants(make_laplace(1, 2), assemble_bertero_grunbaum(ab, 128), 12);
  std::vector<FunctionRep> ens = random_sine_series(rng, 40, ab), big;
  for (const auto& f : ens) big.push_back(f.scaled(17.0));
  const auto a = verify_theorem(make_laplace(1, 2), fit, ens), b = verify_theorem(make_laplace(1, 2), fit, big);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].satisfied, b[i].satisfied);

  for (const auto& f : random_interval_series(rng, 40)) {
    const QuadGrid g = make_grid(f.domain(), 64);
    EXPECT_EQ(verify_lemma2(f, g).pass, verify_lemma2(f.scaled(17.0), g).pass);
  }
  for (const auto& f : random_nonnegative(rng, 40)) {
    const QuadGrid g = make_grid(f.domain(), 64);
    EXPECT_EQ(verify_lemma3(f, g, 1.3).pass, verify_lemma3(f.scaled(17.0), g, 1.3).pass);
  }
}

TEST(Theorems, SignChanges) {
  const std::vector<double> v{1, -1, 2, -3, 0, 4};
  EXPECT_EQ(sign_changes(v), 4);
  const std::vector<double> flat{1, 2, 3};
  EXPECT_EQ(sign_changes(flat), 0);
}

TEST(Ensembles, AreDeterministicForAFixedSeed) {
  Rng a(42), b(42);
  const auto fa = random_poly_exp(a, 5, HalfLineDomain::for_laplace(1));
  const auto fb = random_poly_exp(b, 5, HalfLineDomain::for_laplace(1));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(fa[i].payload(), fb[i].payload());
    EXPECT_EQ(fa[i].scale(), fb[i].scale());
  }
  Rng r(0xC0FFEE);
  double m = 0;
  for (int i = 0; i < 20000; ++i) m += r.uniform();
  EXPECT_NEAR(m / 20000, 0.5, 0.01);
}

TEST(Ensembles, GeneratorMatchesTheReferenceEngine) {
  Rng r(5489);
  EXPECT_EQ(r.next(), 14514284786278117030ULL);
  Rng u(5489);
  EXPECT_EQ(u.uniform(), double(14514284786278117030ULL >> 11) * 0x1p-53);
}
