#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "illposed/domain.hpp"
#include "illposed/function_rep.hpp"

namespace illposed {

enum class SignVariant { AsLemma, AsProofBound };

struct BerteroGrunbaum {
  Interval ab;
};

struct FourthOrderHalfLine {
  Interval ab;
  HalfLineDomain half;
  SignVariant sign_variant;
};

struct Prolate {};

using DiffOpSpec = std::variant<BerteroGrunbaum, FourthOrderHalfLine, Prolate>;

// "bg", "fourth:lemma", "fourth:proof", "prolate"
DiffOpSpec parse_diff_op(std::string_view name, double a = 1.0, double b = 2.0);
std::string to_string(const DiffOpSpec& spec);

enum class BasisFamily { Legendre, Laguerre };

// Larger Laguerre trial spaces lose orthonormality on the truncated grid.
inline constexpr int kMaxHalfLineTrial = 48;
inline constexpr int kMaxTrialSize = 512;

struct TrialBasis {
  BasisFamily family = BasisFamily::Legendre;
  int size = 0;
  Domain domain = Interval(-1.0, 1.0);
  double scale = 1.0;  // Laguerre exponent sigma
  // Laguerre only: phi_i = sum_j transform(i,j) * ell_j
  Eigen::MatrixXd transform;

  // rows: basis index, columns: points
  Eigen::MatrixXd values(std::span<const double> x, int derivative = 0) const;
  FunctionRep to_function(const Eigen::VectorXd& coefficients) const;
  Interval support() const { return bounding_interval(domain); }
  // Legendre basis carried over to another interval by the affine map.
  TrialBasis on_interval(const Interval& target) const;
};

struct GalerkinOperator {
  Eigen::MatrixXd stiffness;
  TrialBasis basis;
  DiffOpSpec spec;
};

GalerkinOperator assemble_bertero_grunbaum(const Interval& ab, int N);
GalerkinOperator assemble_prolate(int N);
GalerkinOperator assemble_fourth_order(const Interval& ab, const HalfLineDomain& half, int N,
                                       SignVariant variant);
GalerkinOperator assemble(const DiffOpSpec& spec, int N);

// Trial-space coefficients of f; throws RepresentationError if the relative
// projection residual exceeds tol.
Eigen::VectorXd project(const TrialBasis& basis, const FunctionRep& f, double tol = 1e-8);

double dirichlet_form(const GalerkinOperator& op, const FunctionRep& f);

// Number of leading eigenvalues that agree with a refined assembly to 1e-8
// relative, capped at N/4.
int converged_mode_count(const DiffOpSpec& spec, int N);

// Gram matrices of the trial basis: <phi_i', phi_j'>, <x phi_i', phi_j>, <x phi_i, phi_j>, <phi_i', phi_j>.
Eigen::MatrixXd derivative_gram(const TrialBasis& basis);
Eigen::MatrixXd moment_derivative_gram(const TrialBasis& basis);
Eigen::MatrixXd moment_gram(const TrialBasis& basis);
Eigen::MatrixXd first_derivative_pairing(const TrialBasis& basis);

}  // namespace illposed
