#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "illposed/function_rep.hpp"
#include "illposed/integral_ops.hpp"

namespace illposed {

struct GramianReport {
  std::string basis_descriptor;
  std::vector<FunctionRep> basis;
  Eigen::MatrixXd gramian;
  double min_eigenvalue = 0;
  Eigen::VectorXd minimizer;
};

// G_ij = <T phi_i, T phi_j>. The smallest eigenpair comes from a binary128
// Jacobi SVD of the factor B (G = B^T B), so min_eigenvalue keeps relative
// accuracy far below the double rounding level of G itself.
GramianReport build_gramian(const OperatorKind& op, std::span<const FunctionRep> basis,
                            const QuadGrid& grid);

FunctionRep worst_function(const GramianReport& report);

// Orthonormal families: "sine", "cosine", "legendre" on an interval, "laguerre" on a half-line.
std::vector<FunctionRep> make_basis(const std::string& family, const Domain& domain, int n);

enum class FigureId { Fig1 = 1, Fig2 = 2, Fig3 = 3 };

struct FigureSpec {
  FigureId figure_id;
  std::vector<double> coefficients;
  RepKind basis;
  int first_frequency;
  Interval domain;
  OperatorKind op;
  double claimed_ratio;
  double tolerance_factor;
};

FigureSpec builtin_figure(int id);
FunctionRep figure_function(const FigureSpec& spec);

struct FigureResult {
  FigureId figure_id;
  double computed_ratio = 0;
  double claimed_ratio = 0;
  double tolerance_factor = 0;
  bool pass = false;
  // Smallest ratio attainable in the span of the plotted basis functions.
  double subspace_min_ratio = 0;
  Eigen::VectorXd subspace_minimizer;
};

FigureResult reproduce_figure(const FigureSpec& spec, int n = 256);

}  // namespace illposed
