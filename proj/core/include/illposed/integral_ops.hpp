#pragma once

#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "illposed/function_rep.hpp"
#include "illposed/linalg.hpp"
#include "illposed/operator_kind.hpp"
#include "illposed/quadrature.hpp"

namespace illposed {

inline constexpr int kMaxGridSize = 1024;

struct OperatorMatrix {
  Eigen::MatrixXd entries;
  QuadGrid grid;
  OperatorKind kind;
  bool symmetrized = true;
};

std::vector<double> laplace_forward(const FunctionRep& f, const Interval& ab,
                                    std::span<const double> s_values, int n = 128);

double kernel_value(const OperatorKind& kind, double x, double y);

OperatorMatrix gram_matrix(const OperatorKind& kind, const QuadGrid& grid);

// ||T f||^2. Forms below kCancellationThreshold * ||f||^2 are recomputed from the
// transform itself with compensated sums.
inline constexpr double kCancellationThreshold = 1e-8;
double quadratic_form(const OperatorMatrix& m, const FunctionRep& f);

// int_{-1}^{1} |f^(xi)|^2 dxi with compensated sums; closed-form transforms
// for raw sine/cosine series, quadrature transforms otherwise.
double fourier_energy(const FunctionRep& f, int n = 256);

// Discretized T with weights folded in: ||T f||^2 ~ |A (sqrt(w) f)|^2.
// Rows live on an output quadrature (J, the half-line, [a,b], or xi in [-1,1]).
template <class Real>
DenseMatrix<Real> transform_factor(const OperatorKind& kind, const Nodes<Real>& in);

void write_csv(std::ostream& os, const OperatorMatrix& m);

namespace detail {
Domain output_domain(const OperatorKind& kind);
int output_size(const OperatorKind& kind, int n);
}  // namespace detail

template <class Real>
DenseMatrix<Real> transform_factor(const OperatorKind& kind, const Nodes<Real>& in) {
  const int n = int(in.x.size());
  const Nodes<Real> out = quadrature_nodes<Real>(detail::output_domain(kind), detail::output_size(kind, n));
  const int m = int(out.x.size());
  const bool fourier = std::holds_alternative<FourierTT>(kind);
  DenseMatrix<Real> a(fourier ? 2 * m : m, n);
  std::vector<Real> sw(n), sv(m);
  for (int i = 0; i < n; ++i) sw[i] = num::sqrt(in.w[i]);
  for (int k = 0; k < m; ++k) sv[k] = num::sqrt(out.w[k]);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) {
      const Real y = out.x[k], x = in.x[i], scale = sv[k] * sw[i];
      if (std::holds_alternative<HilbertTruncated>(kind)) {
        a(k, i) = scale / (num::pi<Real>() * (y - x));
      } else if (fourier) {
        a(2 * k, i) = scale * num::cos(y * x);
        a(2 * k + 1, i) = scale * num::sin(y * x);
      } else {
        a(k, i) = scale * num::exp(-y * x);
      }
    }
  return a;
}

}  // namespace illposed
