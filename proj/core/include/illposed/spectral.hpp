#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "illposed/diff_ops.hpp"
#include "illposed/integral_ops.hpp"

namespace illposed {

enum class SpectrumOrder { AscendingDiff, DescendingIntegral };

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // may be empty for value-only spectra
  SpectrumOrder order = SpectrumOrder::DescendingIntegral;
  std::string source;
  // Fits ignore eigenvalues below relative_floor * |first eigenvalue|.
  double relative_floor = 1e-14;

  SpectralDecomposition leading(int count) const;
};

SpectralDecomposition eig_sym(const Eigen::MatrixXd& m, SpectrumOrder order,
                              std::string source = {});

// Diff-operator eigenpairs ordered by increasing |lambda| (so the negative
// definite lemma variant lists its modes in the same order as the others).
SpectralDecomposition diff_spectrum(const GalerkinOperator& op);

// Flips each column so its largest-magnitude entry is positive.
void normalize_signs(Eigen::MatrixXd& v);

struct ModeMatch {
  int n = 0;
  double lambda = 0;
  double rayleigh = 0;
  double residual = 0;
  double relative_residual = 0;  // residual / ||M||_2
};

struct MatchReport {
  std::vector<ModeMatch> modes;
  double commutation_residual = 0;
  int converged_modes = 0;
  std::string integral_source;
  std::string diff_source;
};

// Diff-operator eigenvectors sampled on the integral grid, with sqrt(w) folded in (n x m).
Eigen::MatrixXd grid_vectors(const OperatorMatrix& integral, const TrialBasis& basis,
                             const Eigen::MatrixXd& coefficients);

double commutation_residual(const OperatorMatrix& integral, const GalerkinOperator& diff);

MatchReport match_eigenfunctions(const OperatorMatrix& integral, const GalerkinOperator& diff,
                                 int m);
MatchReport match_eigenfunctions(const OperatorMatrix& integral, const GalerkinOperator& diff,
                                 int m, int converged);

// Integral-operator eigenvalues to full relative accuracy far below the
// eigensolver floor: mu_1 is the Rayleigh quotient of the first diff
// eigenfunction and each further eigenvalue follows from an exact ratio
// identity between neighbouring eigenfunctions. Supported pairs:
// (LaplaceTT, BerteroGrunbaum) and (FourierTT, Prolate).
SpectralDecomposition commuting_spectrum(const OperatorMatrix& integral,
                                         const GalerkinOperator& diff, int m);

enum class DecayModel { ExpDecay, SuperExp };

struct DecayFit {
  DecayModel model = DecayModel::ExpDecay;
  double c1 = 0;     // ExpDecay
  double c2 = 0;     // ExpDecay
  double slope = 0;  // SuperExp: d log mu / d (n log n)
  double intercept = 0;
  double r_squared = 0;
  int first = 0;
  int last = 0;
  int used = 0;
};

DecayFit fit_decay(const SpectralDecomposition& dec, DecayModel model, int first = 2,
                   int last = 25);

double growth_check(const SpectralDecomposition& dec);

struct LineFit {
  double intercept = 0;
  double slope = 0;
  double r_squared = 0;
  std::vector<double> residuals;
};
LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

std::string to_string(DecayModel m);

}  // namespace illposed
