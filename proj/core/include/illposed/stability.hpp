#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "illposed/diff_ops.hpp"
#include "illposed/function_rep.hpp"
#include "illposed/integral_ops.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

struct Lemma2Result {
  double sup_norm = 0;
  double bound = 0;
  bool applicable = false;
  bool pass = true;
};

// sup|f| <= sqrt(b-a) ||f_x|| for sign-changing f
Lemma2Result verify_lemma2(const FunctionRep& f, const QuadGrid& grid);

struct Lemma3Result {
  double lhs = 0;
  double rhs = 0;
  double c1 = 0;
  bool pass = true;
};

// Constructive prefactor: min(sqrt(b-a)/2, sqrt(min_x h(x))),
// h(x) = exp(c2 / (2 sqrt(x) sqrt(b-a))) x / 2 on (0, b-a].
double lemma3_constant(double c2, const Interval& ab);

// int f >= c1 exp(-c2 ||f_x||/||f||) ||f|| for nonnegative f
Lemma3Result verify_lemma3(const FunctionRep& f, const QuadGrid& grid, double c2);

struct Lemma1Result {
  double low_freq_mass = 0;
  int threshold_index = 0;
  bool pass = false;
};

// f is projected onto the trial space and normalized; dec holds the ascending
// diff spectrum with trial-space eigenvectors.
Lemma1Result verify_lemma1(const FunctionRep& f, const GalerkinOperator& op,
                           const SpectralDecomposition& dec, int converged, double c);

struct Lemma1Constants {
  double growth = 0;    // min lambda_n / n^2 over converged modes
  double dirichlet = 0; // max <Df,f> / ||f_x||^2
  double c = 0;         // sqrt(2 dirichlet / growth)
};

Lemma1Constants lemma1_constants(const GalerkinOperator& op, const SpectralDecomposition& dec,
                                 int converged, std::span<const FunctionRep> ensemble,
                                 int eigenfunctions);

enum class StabilityForm { Exponential, PowerOfRatio };
std::string to_string(StabilityForm f);

struct StabilityFit {
  double c1 = 0;
  double c2 = 0;
  StabilityForm form = StabilityForm::Exponential;
  double r_squared = 0;
  std::string ensemble_descriptor;
  std::vector<double> h1_ratio;
  std::vector<double> log_lhs;
  std::vector<double> residuals;
};

// Exponential:  log lhs = log c1 - c2 h
// PowerOfRatio: log lhs = log c1 - c2 h log(c2 h)
StabilityFit fit_stability_model(const std::vector<double>& h, const std::vector<double>& log_lhs,
                                 StabilityForm form);

struct EigenSweep {
  std::vector<double> h1_ratio;
  std::vector<double> lhs;  // sqrt(mu_n) for Laplace-type, mu_n for Fourier
  std::vector<double> mu;
};

// Eigenfunction sweep behind fit_constants. Supported: (LaplaceTT, bg),
// (FourierTT, prolate), (LaplaceAdjointTT, fourth-order).
EigenSweep eigen_sweep(const OperatorKind& op, const GalerkinOperator& diff, int m, int n = 256);

StabilityFit fit_constants(const OperatorKind& op, const GalerkinOperator& diff, int m,
                           int n = 256);

struct StabilityRecord {
  std::string function_id;
  double lhs = 0;
  double h1_ratio = 0;
  double rhs_at_fit = 0;
  bool satisfied = false;
  std::optional<std::string> error;
};

inline constexpr double kPrefactorRelaxation = 0.5;
inline constexpr double kRateRelaxation = 2.0;

// lhs: ||Tf|| (Laplace, adjoint Laplace) or int |f^|^2 (Fourier).
// h1_ratio: ||f_x||/||f||, or the weighted aggregate over ||f|| on the half-line.
std::vector<StabilityRecord> verify_theorem(const OperatorKind& op, const StabilityFit& fit,
                                            std::span<const FunctionRep> ensemble, int n = 256);

int violation_count(std::span<const StabilityRecord> records);
int sign_changes(std::span<const double> values);

}  // namespace illposed
