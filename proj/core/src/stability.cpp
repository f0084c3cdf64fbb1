#include "illposed/stability.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "illposed/errors.hpp"
#include "illposed/norms.hpp"

namespace illposed {

namespace {

// grid nodes plus 4n+1 equispaced points, endpoints included
std::vector<double> refined_sample(const FunctionRep& f, const QuadGrid& grid) {
  if (!same_support(f, grid.domain())) throw InvalidArgument("function not on the grid's domain");
  const Interval iv = bounding_interval(grid.domain());
  const std::size_t m = 4 * grid.size() + 1;
  std::vector<double> v;
  v.reserve(m + grid.size());
  for (std::size_t i = 0; i < m; ++i) v.push_back(f(iv.a + iv.length() * double(i) / double(m - 1)));
  for (double x : grid.nodes()) v.push_back(f(x));
  return v;
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

Lemma2Result verify_lemma2(const FunctionRep& f, const QuadGrid& grid) {
  const auto v = refined_sample(f, grid);
  Lemma2Result r;
  r.sup_norm = max_abs(v);
  const double tol = 1e-12 * r.sup_norm;
  const bool pos = std::any_of(v.begin(), v.end(), [&](double x) { return x > tol; });
  const bool neg = std::any_of(v.begin(), v.end(), [&](double x) { return x < -tol; });
  r.applicable = pos && neg;
  r.bound = std::sqrt(bounding_interval(grid.domain()).length()) * h1_seminorm(f, grid);
  r.pass = !r.applicable || r.sup_norm <= r.bound * (1 + 1e-12);
  return r;
}

double lemma3_constant(double c2, const Interval& ab) {
  if (!(c2 > 0)) throw InvalidArgument("lemma 3 needs c2 > 0");
  const double len = ab.length();
  auto log_h = [&](double log_x) {
    const double x = std::exp(log_x);
    return c2 / (2 * std::sqrt(x) * std::sqrt(len)) + std::log(x / 2);
  };
  const double lo = std::log(1e-8), hi = std::log(len);
  const int samples = 2000;
  int best = 0;
  double best_val = log_h(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = log_h(lo + (hi - lo) * i / samples);
    if (v < best_val) best_val = v, best = i;
  }
  const double step = (hi - lo) / samples;
  const double a = std::max(lo, lo + (best - 1) * step), b = std::min(hi, lo + (best + 1) * step);
  const auto refined = boost::math::tools::brent_find_minima(log_h, a, b, 52);
  best_val = std::min(best_val, refined.second);
  return std::min(std::sqrt(len) / 2, std::exp(0.5 * best_val));
}

Lemma3Result verify_lemma3(const FunctionRep& f, const QuadGrid& grid, double c2) {
  const auto v = refined_sample(f, grid);
  const double scale = max_abs(v);
  if (std::any_of(v.begin(), v.end(), [&](double x) { return x < -1e-12 * scale; }))
    throw InvalidArgument("lemma 3 needs a nonnegative function");
  Lemma3Result r;
  r.c1 = lemma3_constant(c2, bounding_interval(grid.domain()));
  const double norm = l2_norm(f, grid);
  if (norm == 0.0) return r;
  const auto fv = sample(f, grid);
  r.lhs = grid.integrate(fv);
  r.rhs = r.c1 * std::exp(-c2 * h1_seminorm(f, grid) / norm) * norm;
  r.pass = r.lhs >= r.rhs * (1 - 1e-12);
  return r;
}

Lemma1Result verify_lemma1(const FunctionRep& f, const GalerkinOperator& op,
                           const SpectralDecomposition& dec, int converged, double c) {
  Eigen::VectorXd coef = project(op.basis, f);
  const double norm = coef.norm();
  if (norm == 0.0) throw InvalidArgument("lemma 1 needs a nonzero function");
  coef /= norm;
  const double fx = std::sqrt(std::max(0.0, coef.dot(derivative_gram(op.basis) * coef)));
  Lemma1Result r;
  r.threshold_index = int(std::floor(c * fx));
  const int upto = std::min({r.threshold_index, converged, int(dec.eigenvectors.cols())});
  for (int n = 0; n < upto; ++n) {
    const double p = dec.eigenvectors.col(n).dot(coef);
    r.low_freq_mass += p * p;
  }
  r.pass = r.low_freq_mass >= 0.5;
  if (!r.pass && r.threshold_index > converged)
    throw InsufficientData("lemma 1 threshold " + std::to_string(r.threshold_index) +
                           " exceeds the converged modes");
  return r;
}

Lemma1Constants lemma1_constants(const GalerkinOperator& op, const SpectralDecomposition& dec,
                                 int converged, std::span<const FunctionRep> ensemble,
                                 int eigenfunctions) {
  Lemma1Constants k;
  k.growth = growth_check(dec.leading(converged));
  const Eigen::MatrixXd d1 = derivative_gram(op.basis);
  auto ratio = [&](const Eigen::VectorXd& c) {
    return c.dot(op.stiffness * c) / c.dot(d1 * c);
  };
  for (int n = 0; n < std::min<int>(eigenfunctions, int(dec.eigenvectors.cols())); ++n)
    k.dirichlet = std::max(k.dirichlet, ratio(dec.eigenvectors.col(n)));
  for (const auto& f : ensemble) k.dirichlet = std::max(k.dirichlet, ratio(project(op.basis, f)));
  k.c = std::sqrt(2 * k.dirichlet / k.growth);
  return k;
}

std::string to_string(StabilityForm f) {
  return f == StabilityForm::Exponential ? "Exponential" : "PowerOfRatio";
}

StabilityFit fit_stability_model(const std::vector<double>& h, const std::vector<double>& y,
                                 StabilityForm form) {
  if (h.size() != y.size() || h.size() < 3)
    throw InsufficientData("stability fit needs at least three points");
  StabilityFit fit;
  fit.form = form;
  fit.h1_ratio = h;
  fit.log_lhs = y;
  if (form == StabilityForm::Exponential) {
    const LineFit line = least_squares_line(h, y);
    fit.c1 = std::exp(line.intercept);
    fit.c2 = -line.slope;
    fit.r_squared = line.r_squared;
    fit.residuals = line.residuals;
    return fit;
  }
  const double n = double(h.size());
  double my = 0;
  for (double v : y) my += v;
  my /= n;
  double sst = 0;
  for (double v : y) sst += (v - my) * (v - my);
  // profile out log c1, then minimize over log c2
  auto sse = [&](double log_c2, double* log_c1 = nullptr) {
    const double c2 = std::exp(log_c2);
    std::vector<double> z(h.size());
    double shift = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      z[i] = h[i] > 0 ? -c2 * h[i] * std::log(c2 * h[i]) : 0.0;
      shift += y[i] - z[i];
    }
    shift /= n;
    if (log_c1) *log_c1 = shift;
    double s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += (y[i] - shift - z[i]) * (y[i] - shift - z[i]);
    return s;
  };
  const double lo = std::log(1e-3), hi = std::log(50.0);
  const int samples = 400;
  int best = 0;
  double best_val = sse(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = sse(lo + (hi - lo) * i / samples);
    if (v < best_val) best_val = v, best = i;
  }
  const double step = (hi - lo) / samples;
  const auto refined = boost::math::tools::brent_find_minima(
      [&](double t) { return sse(t); }, std::max(lo, lo + (best - 1) * step),
      std::min(hi, lo + (best + 1) * step), 52);
  const double log_c2 = refined.second < best_val ? refined.first : lo + best * step;
  double log_c1 = 0;
  const double s = sse(log_c2, &log_c1);
  fit.c1 = std::exp(log_c1);
  fit.c2 = std::exp(log_c2);
  fit.r_squared = sst > 0 ? std::clamp(1 - s / sst, 0.0, 1.0) : 1.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    fit.residuals.push_back(y[i] - log_c1 + fit.c2 * h[i] * std::log(fit.c2 * h[i]));
  return fit;
}

EigenSweep eigen_sweep(const OperatorKind& op, const GalerkinOperator& diff, int m, int n) {
  EigenSweep sweep;
  const bool laplace = std::holds_alternative<LaplaceTT>(op) &&
                       std::holds_alternative<BerteroGrunbaum>(diff.spec);
  const bool fourier = std::holds_alternative<FourierTT>(op) && std::holds_alternative<Prolate>(diff.spec);
  const bool adjoint = std::holds_alternative<LaplaceAdjointTT>(op) &&
                       std::holds_alternative<FourthOrderHalfLine>(diff.spec);
  if (laplace || fourier) {
    const OperatorMatrix mat = gram_matrix(op, make_grid(input_domain(op), n));
    const SpectralDecomposition spec = commuting_spectrum(mat, diff, m);
    const Eigen::MatrixXd d1 = derivative_gram(diff.basis);
    for (int k = 0; k < m; ++k) {
      const Eigen::VectorXd v = spec.eigenvectors.col(k);
      sweep.h1_ratio.push_back(std::sqrt(v.dot(d1 * v)));
      sweep.mu.push_back(spec.eigenvalues[k]);
      sweep.lhs.push_back(laplace ? std::sqrt(spec.eigenvalues[k]) : spec.eigenvalues[k]);
    }
    return sweep;
  }
  if (!adjoint) throw UnsupportedKind("no eigenfunction sweep for this operator pair");
  // L L* and L* L share their nonzero spectrum, so the adjoint eigenvalues come
  // from the Laplace chain on the same interval.
  const auto& adj = std::get<LaplaceAdjointTT>(op);
  const int converged = converged_mode_count(diff.spec, diff.basis.size);
  if (m > converged)
    throw RangeError("requested " + std::to_string(m) + " modes but only " +
                     std::to_string(converged) + " are converged");
  const GalerkinOperator bg = assemble_bertero_grunbaum(adj.ab, 128);
  const OperatorMatrix lap = gram_matrix(LaplaceTT{adj.ab}, make_grid(adj.ab, n));
  const SpectralDecomposition mu = commuting_spectrum(lap, bg, m);
  const SpectralDecomposition dec = diff_spectrum(diff);
  const QuadGrid half = make_grid(adj.half, 512);
  for (int k = 0; k < m; ++k) {
    const FunctionRep v = diff.basis.to_function(dec.eigenvectors.col(k));
    sweep.h1_ratio.push_back(weighted_aggregate(v, half) / l2_norm(v, half));
    sweep.mu.push_back(mu.eigenvalues[k]);
    sweep.lhs.push_back(std::sqrt(mu.eigenvalues[k]));
  }
  return sweep;
}

StabilityFit fit_constants(const OperatorKind& op, const GalerkinOperator& diff, int m, int n) {
  const EigenSweep sweep = eigen_sweep(op, diff, m, n);
  std::vector<double> y;
  for (double v : sweep.lhs) y.push_back(std::log(v));
  const StabilityForm form =
      std::holds_alternative<FourierTT>(op) ? StabilityForm::PowerOfRatio : StabilityForm::Exponential;
  StabilityFit fit = fit_stability_model(sweep.h1_ratio, y, form);
  fit.ensemble_descriptor = "eigenfunctions 1.." + std::to_string(m) + " of " + to_string(diff.spec) +
                            " against " + to_string(op);
  if (!(fit.c1 > 0) || !(fit.c2 > 0)) throw InsufficientData("fitted constants are not positive");
  return fit;
}

std::vector<StabilityRecord> verify_theorem(const OperatorKind& op, const StabilityFit& fit,
                                            std::span<const FunctionRep> ensemble, int n) {
  const QuadGrid grid = make_grid(input_domain(op), n);
  const OperatorMatrix m = gram_matrix(op, grid);
  const bool fourier = std::holds_alternative<FourierTT>(op);
  const bool adjoint = std::holds_alternative<LaplaceAdjointTT>(op);
  const double c1 = kPrefactorRelaxation * fit.c1, c2 = kRateRelaxation * fit.c2;
  std::vector<StabilityRecord> out;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    StabilityRecord r;
    r.function_id = "f" + std::to_string(i);
    try {
      const FunctionRep& f = ensemble[i];
      const double norm = l2_norm(f, grid);
      if (norm == 0.0) throw InvalidArgument("zero function");
      const double q = quadratic_form(m, f);
      r.lhs = fourier ? q : std::sqrt(std::max(0.0, q));
      r.h1_ratio = (adjoint ? weighted_aggregate(f, grid) : h1_seminorm(f, grid)) / norm;
      if (fit.form == StabilityForm::Exponential) {
        r.rhs_at_fit = c1 * std::exp(-c2 * r.h1_ratio) * norm;
      } else {
        const double x = c2 * r.h1_ratio;
        r.rhs_at_fit = c1 * (x > 0 ? std::exp(-x * std::log(x)) : 1.0) * norm * norm;
      }
      r.satisfied = r.lhs >= r.rhs_at_fit;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

int violation_count(std::span<const StabilityRecord> records) {
  return int(std::count_if(records.begin(), records.end(),
                           [](const StabilityRecord& r) { return !r.error && !r.satisfied; }));
}

int sign_changes(std::span<const double> values) {
  int changes = 0, last = 0;
  for (double v : values) {
    const int s = v > 0 ? 1 : v < 0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace illposed
