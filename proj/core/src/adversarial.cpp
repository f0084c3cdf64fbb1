#include "illposed/adversarial.hpp"

#include <cmath>

#include "illposed/errors.hpp"
#include "illposed/linalg.hpp"
#include "illposed/norms.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

using num::quad;

namespace {

bool combinable(const FunctionRep& x, const FunctionRep& y) {
  if (x.kind() != y.kind() || !(x.domain() == y.domain()) || x.convention() != y.convention() ||
      x.scale() != y.scale())
    return false;
  return x.kind() != RepKind::GridSamples || x.payload().size() == y.payload().size();
}

}  // namespace

GramianReport build_gramian(const OperatorKind& op, std::span<const FunctionRep> basis,
                            const QuadGrid& grid) {
  if (basis.empty()) throw InvalidArgument("build_gramian: empty basis");
  if (!(grid.domain() == input_domain(op)))
    throw InvalidArgument("build_gramian: grid does not match " + to_string(op));
  const int n = int(grid.size()), nb = int(basis.size());

  Eigen::MatrixXd phi(n, nb);
  for (int j = 0; j < nb; ++j) {
    const auto v = sample(basis[j], grid);
    for (int i = 0; i < n; ++i) phi(i, j) = std::sqrt(grid.weights()[i]) * v[i];
  }
  const double defect = (phi.transpose() * phi - Eigen::MatrixXd::Identity(nb, nb)).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw InvalidArgument("build_gramian: basis is not orthonormal on the grid (defect " +
                          std::to_string(defect) + ")");

  const Nodes<quad> nodes = quadrature_nodes<quad>(grid.domain(), n);
  DenseMatrix<quad> phiq(n, nb);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < n; ++i) phiq(i, j) = num::sqrt(nodes.w[i]) * basis[j].eval<quad>(nodes.x[i]);
  const DenseMatrix<quad> b = multiply(transform_factor<quad>(op, nodes), phiq);

  GramianReport r;
  r.basis.assign(basis.begin(), basis.end());
  r.basis_descriptor = to_string(basis[0].kind()) + " x" + std::to_string(nb) + " on " +
                       describe(grid.domain());
  r.gramian.resize(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      quad s = 0;
      for (int k = 0; k < b.rows; ++k) s += b(k, i) * b(k, j);
      r.gramian(i, j) = double(s);
    }
  const auto svd = jacobi_svd(b);
  const quad smin = svd.sigma.back();
  r.min_eigenvalue = double(smin * smin);
  Eigen::MatrixXd v(nb, 1);
  for (int i = 0; i < nb; ++i) v(i, 0) = double(svd.v(i, nb - 1));
  v.col(0).normalize();
  normalize_signs(v);
  r.minimizer = v.col(0);
  return r;
}

FunctionRep worst_function(const GramianReport& report) {
  const auto& basis = report.basis;
  bool same = true;
  for (const auto& f : basis) same = same && combinable(f, basis[0]);
  if (same) {
    FunctionRep acc = basis[0].scaled(report.minimizer[0]);
    for (std::size_t k = 1; k < basis.size(); ++k) acc = acc.plus(basis[k].scaled(report.minimizer[k]));
    return acc;
  }
  return FunctionRep::from_callable(basis[0].domain(), 129, [&](double x) {
    double s = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) s += report.minimizer[k] * basis[k](x);
    return s;
  });
}

std::vector<FunctionRep> make_basis(const std::string& family, const Domain& domain, int n) {
  if (n < 1) throw InvalidArgument("basis size must be positive");
  std::vector<FunctionRep> out;
  const Interval iv = bounding_interval(domain);
  const double len = iv.length();
  for (int k = 0; k < n; ++k) {
    if (family == "sine") {
      std::vector<double> c(k + 1, 0.0);
      c[k] = std::sqrt(2.0 / len);
      out.push_back(FunctionRep::sine_series(iv, std::move(c)));
    } else if (family == "cosine") {
      std::vector<double> c(k + 1, 0.0);
      c[k] = k == 0 ? std::sqrt(1.0 / len) : std::sqrt(2.0 / len);
      out.push_back(FunctionRep::cosine_series(iv, std::move(c)));
    } else if (family == "legendre") {
      std::vector<double> c(k + 1, 0.0);
      c[k] = 1.0;
      out.push_back(FunctionRep::legendre_series(iv, std::move(c)));
    } else if (family == "laguerre") {
      const auto* half = std::get_if<HalfLineDomain>(&domain);
      if (!half) throw InvalidArgument("laguerre basis needs a half-line domain");
      std::vector<double> c(k + 1, 0.0);
      c[k] = 1.0;
      out.push_back(FunctionRep::laguerre_series(half->s_max, 40.0 / half->s_max, std::move(c)));
    } else {
      throw InvalidArgument("unknown basis family '" + family + "'");
    }
  }
  return out;
}

FigureSpec builtin_figure(int id) {
  switch (id) {
    case 1:
      return FigureSpec{FigureId::Fig1, {-0.15269, 0.4830, 0.3084, 0.80509}, RepKind::SineSeries, 2,
                        Interval(0.0, 1.0), make_hilbert(Interval(0.0, 1.0), Interval(2.0, 3.0)),
                        1e-7, 30.0};
    case 2:
      return FigureSpec{FigureId::Fig2, {-0.0707, -0.421, 0.2137, 0.8783}, RepKind::SineSeries, 1,
                        Interval(1.0, 2.0), make_laplace(1.0, 2.0), 1e-8, 30.0};
    case 3:
      return FigureSpec{FigureId::Fig3, {0.00055, 0.0824, 0.6196, 0.7805}, RepKind::CosineSeries, 1,
                        Interval(-1.0, 1.0), make_fourier(), 1e-18, 100.0};
  }
  throw InvalidArgument("unknown figure id " + std::to_string(id));
}

namespace {

FunctionRep raw_series(RepKind kind, const Interval& d, int frequency, double c) {
  const int offset = kind == RepKind::SineSeries ? 1 : 0;
  std::vector<double> p(frequency - offset + 1, 0.0);
  p[frequency - offset] = c;
  return kind == RepKind::SineSeries ? FunctionRep::sine_series(d, p, BasisConvention::Raw)
                                     : FunctionRep::cosine_series(d, p, BasisConvention::Raw);
}

}  // namespace

FunctionRep figure_function(const FigureSpec& spec) {
  FunctionRep f = raw_series(spec.basis, spec.domain, spec.first_frequency, spec.coefficients[0]);
  for (std::size_t k = 1; k < spec.coefficients.size(); ++k)
    f = f.plus(raw_series(spec.basis, spec.domain, spec.first_frequency + int(k), spec.coefficients[k]));
  return f;
}

FigureResult reproduce_figure(const FigureSpec& spec, int n) {
  const QuadGrid grid = make_grid(spec.domain, n);
  const OperatorMatrix m = gram_matrix(spec.op, grid);
  const FunctionRep f = figure_function(spec);
  const double norm = l2_norm(f, grid);
  FigureResult r;
  r.figure_id = spec.figure_id;
  r.claimed_ratio = spec.claimed_ratio;
  r.tolerance_factor = spec.tolerance_factor;
  r.computed_ratio = quadratic_form(m, f) / (norm * norm);
  r.pass = r.computed_ratio >= spec.claimed_ratio / spec.tolerance_factor &&
           r.computed_ratio <= spec.claimed_ratio * spec.tolerance_factor;

  std::vector<FunctionRep> basis;
  for (std::size_t k = 0; k < spec.coefficients.size(); ++k) {
    FunctionRep g = raw_series(spec.basis, spec.domain, spec.first_frequency + int(k), 1.0);
    basis.push_back(g.scaled(1.0 / l2_norm(g, grid)));
  }
  const GramianReport gr = build_gramian(spec.op, basis, grid);
  r.subspace_min_ratio = gr.min_eigenvalue;
  r.subspace_minimizer = gr.minimizer;
  return r;
}

}  // namespace illposed
