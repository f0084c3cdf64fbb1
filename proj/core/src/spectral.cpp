#include "illposed/spectral.hpp"

#include <cmath>

#include "illposed/errors.hpp"

namespace illposed {

SpectralDecomposition SpectralDecomposition::leading(int count) const {
  SpectralDecomposition d = *this;
  count = std::min<int>(count, int(eigenvalues.size()));
  d.eigenvalues = eigenvalues.head(count);
  if (eigenvectors.cols() > 0) d.eigenvectors = eigenvectors.leftCols(count);
  return d;
}

void normalize_signs(Eigen::MatrixXd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index idx = 0;
    v.col(j).cwiseAbs().maxCoeff(&idx);
    if (v(idx, j) < 0) v.col(j) *= -1.0;
  }
}

SpectralDecomposition eig_sym(const Eigen::MatrixXd& m, SpectrumOrder order, std::string source) {
  if (m.rows() != m.cols()) throw InvalidArgument("eig_sym: matrix not square");
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw InvalidArgument("eig_sym: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw InvalidArgument("eig_sym: solver failed");
  SpectralDecomposition d;
  d.order = order;
  d.source = std::move(source);
  d.eigenvalues = es.eigenvalues();
  d.eigenvectors = es.eigenvectors();
  if (order == SpectrumOrder::DescendingIntegral) {
    d.eigenvalues.reverseInPlace();
    d.eigenvectors = d.eigenvectors.rowwise().reverse().eval();
  }
  normalize_signs(d.eigenvectors);
  return d;
}

SpectralDecomposition diff_spectrum(const GalerkinOperator& op) {
  auto d = eig_sym(op.stiffness, SpectrumOrder::AscendingDiff, to_string(op.spec));
  if (d.eigenvalues.size() > 0 && d.eigenvalues[d.eigenvalues.size() - 1] < 0) {
    d.eigenvalues.reverseInPlace();
    d.eigenvectors = d.eigenvectors.rowwise().reverse().eval();
  }
  return d;
}

namespace {

TrialBasis basis_on_grid(const OperatorMatrix& integral, const TrialBasis& basis) {
  const Domain& gd = integral.grid.domain();
  if (basis.family == BasisFamily::Laguerre) {
    if (!std::holds_alternative<HalfLineDomain>(gd) ||
        !(bounding_interval(gd) == basis.support()))
      throw InvalidArgument("half-line trial space needs the matching half-line grid");
    return basis;
  }
  if (!std::holds_alternative<Interval>(gd))
    throw InvalidArgument("interval trial space cannot live on a half-line grid");
  const Interval iv = std::get<Interval>(gd);
  return iv == basis.support() ? basis : basis.on_interval(iv);
}

// N x n, basis values with sqrt(w) folded in
Eigen::MatrixXd weighted_values(const OperatorMatrix& integral, const TrialBasis& basis) {
  const TrialBasis b = basis_on_grid(integral, basis);
  Eigen::MatrixXd phi = b.values(integral.grid.nodes(), 0);
  for (Eigen::Index i = 0; i < phi.cols(); ++i) phi.col(i) *= std::sqrt(integral.grid.weights()[i]);
  return phi;
}

double spectral_norm(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

Eigen::MatrixXd grid_vectors(const OperatorMatrix& integral, const TrialBasis& basis,
                             const Eigen::MatrixXd& coefficients) {
  return weighted_values(integral, basis).transpose() * coefficients;
}

double commutation_residual(const OperatorMatrix& integral, const GalerkinOperator& diff) {
  const Eigen::MatrixXd phi = weighted_values(integral, diff.basis);
  const Eigen::MatrixXd k = phi * integral.entries * phi.transpose();
  const Eigen::MatrixXd& s = diff.stiffness;
  const Eigen::MatrixXd c = k * s - s * k;
  return c.norm() / (k.norm() * s.norm());
}

MatchReport match_eigenfunctions(const OperatorMatrix& integral, const GalerkinOperator& diff,
                                 int m) {
  DiffOpSpec spec = diff.spec;
  return match_eigenfunctions(integral, diff, m, converged_mode_count(spec, diff.basis.size));
}

MatchReport match_eigenfunctions(const OperatorMatrix& integral, const GalerkinOperator& diff,
                                 int m, int converged) {
  if (m < 1) throw InvalidArgument("mode count must be positive");
  if (m > converged)
    throw RangeError("requested " + std::to_string(m) + " modes but only " +
                     std::to_string(converged) + " are converged");
  const auto dec = diff_spectrum(diff);
  const Eigen::MatrixXd u = grid_vectors(integral, diff.basis, dec.eigenvectors.leftCols(m));
  const double mnorm = spectral_norm(integral.entries);
  MatchReport r;
  r.converged_modes = converged;
  r.integral_source = to_string(integral.kind);
  r.diff_source = to_string(diff.spec);
  for (int k = 0; k < m; ++k) {
    const Eigen::VectorXd v = u.col(k);
    const Eigen::VectorXd mv = integral.entries * v;
    ModeMatch mm;
    mm.n = k + 1;
    mm.lambda = dec.eigenvalues[k];
    mm.rayleigh = v.dot(mv) / v.squaredNorm();
    mm.residual = (mv - mm.rayleigh * v).norm() / v.norm();
    mm.relative_residual = mnorm > 0 ? mm.residual / mnorm : 0.0;
    r.modes.push_back(mm);
  }
  r.commutation_residual = commutation_residual(integral, diff);
  return r;
}

SpectralDecomposition commuting_spectrum(const OperatorMatrix& integral,
                                         const GalerkinOperator& diff, int m) {
  const bool laplace = std::holds_alternative<LaplaceTT>(integral.kind) &&
                       std::holds_alternative<BerteroGrunbaum>(diff.spec);
  const bool fourier = std::holds_alternative<FourierTT>(integral.kind) &&
                       std::holds_alternative<Prolate>(diff.spec);
  if (!laplace && !fourier)
    throw UnsupportedKind("commuting spectrum needs (laplace, bg) or (fourier, prolate)");
  if (laplace && !(std::get<LaplaceTT>(integral.kind).ab == diff.basis.support()))
    throw InvalidArgument("Laplace interval differs from the trial space");
  const int converged = converged_mode_count(diff.spec, diff.basis.size);
  if (m < 1 || m > converged)
    throw RangeError("requested " + std::to_string(m) + " modes but only " +
                     std::to_string(converged) + " are converged");

  const auto dec = diff_spectrum(diff);
  const Eigen::MatrixXd v = dec.eigenvectors.leftCols(m);
  const Eigen::VectorXd u1 = grid_vectors(integral, diff.basis, v.col(0));
  Eigen::VectorXd mu(m);
  mu[0] = u1.dot(integral.entries * u1) / u1.squaredNorm();

  if (laplace) {
    const Interval ab = diff.basis.support();
    const double ends_x[2] = {ab.a, ab.b};
    const Eigen::MatrixXd ends = diff.basis.values(ends_x, 0).transpose() * v;  // 2 x m
    const Eigen::MatrixXd g = moment_derivative_gram(diff.basis);               // <t phi_i', phi_j>
    for (int n = 0; n + 1 < m; ++n) {
      const double pairing = v.col(n).dot(g * v.col(n + 1));
      const double boundary =
          ab.a * ends(0, n) * ends(0, n + 1) - ab.b * ends(1, n) * ends(1, n + 1);
      mu[n + 1] = mu[n] / (1.0 + boundary / pairing);
    }
  } else {
    const Eigen::MatrixXd x = moment_gram(diff.basis);
    const Eigen::MatrixXd d = first_derivative_pairing(diff.basis);  // <phi_i', phi_j>
    for (int n = 0; n + 1 < m; ++n) {
      const double num = v.col(n + 1).dot(x * v.col(n));
      const double den = v.col(n + 1).dot(d * v.col(n));
      mu[n + 1] = mu[n] * (num / den) * (num / den);
    }
  }

  SpectralDecomposition out;
  out.eigenvalues = mu;
  out.eigenvectors = v;
  out.order = SpectrumOrder::DescendingIntegral;
  out.source = "commuting:" + to_string(integral.kind) + "|" + to_string(diff.spec);
  out.relative_floor = 0.0;
  return out;
}

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InsufficientData("line fit needs two points");
  const double n = double(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw InsufficientData("line fit needs distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    f.residuals.push_back(r);
    ssr += r * r;
  }
  f.r_squared = syy > 0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  return f;
}

DecayFit fit_decay(const SpectralDecomposition& dec, DecayModel model, int first, int last) {
  if (first < 1 || last < first) throw InvalidArgument("fit window must satisfy 1 <= first <= last");
  std::vector<double> x, y;
  const double top = dec.eigenvalues.size() ? std::fabs(dec.eigenvalues[0]) : 0.0;
  for (int n = first; n <= last && n <= dec.eigenvalues.size(); ++n) {
    const double mu = dec.eigenvalues[n - 1];
    if (!(mu > 0) || mu < dec.relative_floor * top) continue;
    x.push_back(model == DecayModel::ExpDecay ? double(n) : n * std::log(double(n)));
    y.push_back(std::log(mu));
  }
  if (x.size() < 8)
    throw InsufficientData("fit needs at least 8 usable modes, found " + std::to_string(x.size()));
  const LineFit line = least_squares_line(x, y);
  DecayFit f;
  f.model = model;
  f.first = first;
  f.last = last;
  f.used = int(x.size());
  f.r_squared = line.r_squared;
  f.slope = line.slope;
  f.intercept = line.intercept;
  if (model == DecayModel::ExpDecay) {
    f.c1 = std::exp(line.intercept);
    f.c2 = -line.slope;
  }
  return f;
}

double growth_check(const SpectralDecomposition& dec) {
  if (dec.eigenvalues.size() == 0) throw InsufficientData("growth_check: empty spectrum");
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
    best = std::min(best, dec.eigenvalues[i] / double((i + 1) * (i + 1)));
  return best;
}

std::string to_string(DecayModel m) { return m == DecayModel::ExpDecay ? "ExpDecay" : "SuperExp"; }

}  // namespace illposed
