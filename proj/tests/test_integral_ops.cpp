#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "illposed/adversarial.hpp"
#include "illposed/errors.hpp"
#include "illposed/integral_ops.hpp"
#include "illposed/norms.hpp"
#include "illposed/random.hpp"

using namespace illposed;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST(Operators, ParseAndPrint) {
  const auto h = parse_operator_kind("hilbert:I=0,1:J=2,3");
  ASSERT_TRUE(std::holds_alternative<HilbertTruncated>(h));
  EXPECT_EQ(std::get<HilbertTruncated>(h).J, Interval(2, 3));
  EXPECT_TRUE(std::holds_alternative<LaplaceTT>(parse_operator_kind("laplace:a=1,b=2")));
  EXPECT_TRUE(std::holds_alternative<LaplaceAdjointTT>(parse_operator_kind("laplace-adjoint:a=1,b=2")));
  EXPECT_TRUE(std::holds_alternative<FourierTT>(parse_operator_kind("fourier")));
  EXPECT_EQ(to_string(parse_operator_kind(to_string(h))), to_string(h));
  EXPECT_THROW(parse_operator_kind("laplace:a=2,b=1"), InvalidArgument);
  EXPECT_THROW(parse_operator_kind("wavelet"), InvalidArgument);
  EXPECT_THROW(make_hilbert(Interval(0, 2), Interval(1, 3)), InvalidArgument);
}

TEST(Operators, KernelValues) {
  EXPECT_DOUBLE_EQ(kernel_value(make_laplace(1, 2), 1.0, 1.5), 0.4);
  EXPECT_DOUBLE_EQ(kernel_value(make_fourier(), 0.3, 0.3), 2.0);
  EXPECT_NEAR(kernel_value(make_fourier(), 0.9, -0.2), 2 * std::sin(1.1) / 1.1, 1e-15);
  EXPECT_NEAR(kernel_value(make_laplace_adjoint(1, 2), 0.5, 1.0),
              (std::exp(-1.5) - std::exp(-3.0)) / 1.5, 1e-15);
  EXPECT_THROW(kernel_value(make_hilbert(Interval(0, 1), Interval(2, 3)), 0.1, 0.2), UnsupportedKind);
}

TEST(Operators, QuadraticFormsMatchIndependentIntegrals) {
  const Interval ab(1, 2);
  const auto one = FunctionRep::legendre_series(ab, {1.0});
  // ||L 1||^2 = 10 ln 2 - 6 ln 3
  EXPECT_LT(rel(quadratic_form(gram_matrix(make_laplace(1, 2), make_grid(ab, 64)), one),
                0.33979807359079495), 1e-13);
  const auto x = FunctionRep::from_callable(ab, 3, [](double t) { return t; });
  EXPECT_LT(rel(quadratic_form(gram_matrix(make_laplace(1, 2), make_grid(ab, 64)), x),
                0.736005685662611308), 1e-13);
  const Interval I(0, 1);
  const auto h1 = FunctionRep::legendre_series(I, {1.0});
  EXPECT_LT(rel(quadratic_form(gram_matrix(make_hilbert(I, Interval(2, 3)), make_grid(I, 128)), h1),
                0.028411015826842835), 1e-12);
  const Interval sym(-1, 1);
  const auto c = FunctionRep::legendre_series(sym, {std::sqrt(2.0)});
  EXPECT_LT(rel(quadratic_form(gram_matrix(make_fourier(), make_grid(sym, 64)), c), 7.1787164682329892), 1e-13);
  const auto lin = FunctionRep::from_callable(sym, 3, [](double t) { return t; });
  EXPECT_LT(rel(fourier_energy(lin, 64), 0.26283617888329109), 1e-12);
}

TEST(Operators, FourierClosedFormMatchesQuadrature) {
  const Interval sym(-1, 1);
  const auto raw = FunctionRep::cosine_series(sym, {0.3, -0.2, 0.5, 0.1}, BasisConvention::Raw);
  const auto sampled = FunctionRep::from_callable(sym, 65, [&](double x) { return raw(x); });
  EXPECT_LT(rel(fourier_energy(raw), fourier_energy(sampled)), 1e-11);
  const auto sn = FunctionRep::sine_series(sym, {0.4, 0.0, -0.7}, BasisConvention::Raw);
  const auto sn2 = FunctionRep::from_callable(sym, 65, [&](double x) { return sn(x); });
  EXPECT_LT(rel(fourier_energy(sn), fourier_energy(sn2)), 1e-11);
}

TEST(Operators, LaplaceForwardClosedForm) {
  const Interval ab(1, 2);
  const auto f = FunctionRep::sine_series(ab, {1.0});
  const std::vector<double> s{0.0, 1.5};
  const auto v = laplace_forward(f, ab, s);
  EXPECT_NEAR(v[0], 2 / M_PI, 1e-14);
  EXPECT_NEAR(v[1], 0.070744451037346505, 1e-15);
  EXPECT_THROW(laplace_forward(f, Interval(0, 1), s), InvalidArgument);
  const std::vector<double> bad{-1.0};
  EXPECT_THROW(laplace_forward(f, ab, bad), InvalidArgument);
}

TEST(Operators, GramMatrixIsSymmetricPositiveSemidefinite) {
  for (const auto& op : {make_laplace(1, 2), make_fourier(), make_hilbert(Interval(0, 1), Interval(2, 3))}) {
    const auto m = gram_matrix(op, make_grid(input_domain(op), 48));
    EXPECT_LT((m.entries - m.entries.transpose()).norm(), 1e-14 * m.entries.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.entries);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-13 * es.eigenvalues().maxCoeff());
  }
}

TEST(Operators, GridValidation) {
  EXPECT_THROW(gram_matrix(make_laplace(1, 2), make_grid(Interval(0, 1), 16)), InvalidArgument);
  EXPECT_THROW(gram_matrix(make_laplace(1, 2), make_grid(Interval(1, 2), kMaxGridSize + 1)), InvalidArgument);
}

TEST(Operators, GramianAgreesWithDirectQuadraticForm) {
  const Interval ab(1, 2);
  const auto op = make_laplace(1, 2);
  const QuadGrid grid = make_grid(ab, 128);
  const auto basis = make_basis("sine", ab, 6);
  const GramianReport g = build_gramian(op, basis, grid);
  const auto m = gram_matrix(op, grid);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd a(6);
    std::vector<double> c(6);
    for (int k = 0; k < 6; ++k) c[k] = a[k] = rng.normal();
    const auto f = FunctionRep::sine_series(ab, c).scaled(std::sqrt(2.0));
    EXPECT_LT(rel(a.dot(g.gramian * a), quadratic_form(m, f)), 1e-9);
  }
}

TEST(Operators, CancellationAwareFormTracksTinyValues) {
  const Interval I(0, 1);
  const auto op = make_hilbert(I, Interval(2, 3));
  const QuadGrid grid = make_grid(I, 256);
  const auto m = gram_matrix(op, grid);
  const GramianReport g = build_gramian(op, make_basis("sine", I, 8), grid);
  const auto w = worst_function(g);
  // the minimizer is rounded to double, which perturbs a 1e-27 form at the 1e-4 level
  EXPECT_LT(rel(quadratic_form(m, w) / std::pow(l2_norm(w, grid), 2), g.min_eigenvalue), 1e-3);
}
