#include "illposed_app/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "illposed/adversarial.hpp"
#include "illposed/errors.hpp"
#include "illposed_app/suites.hpp"

namespace illposed::app {

namespace {

constexpr double kFigureRuntime = 1.0;
constexpr double kFigure3Runtime = 2.0;
constexpr double kFigure3Low = 1e-20, kFigure3High = 1e-16;
constexpr int kMatchModes = 10;
constexpr double kMatchResidual = 1e-6;
constexpr double kCommutation = 1e-8;
constexpr int kLaplaceModes = 25;
constexpr double kLaplaceR2 = 0.99;
constexpr double kLaplaceRuntime = 5.0;
constexpr double kWindowAgreement = 0.15;
constexpr double kGrowthStability = 0.02;
constexpr int kGramianFirst = 3, kGramianLast = 12;
constexpr double kGramianR2 = 0.97;
constexpr int kMinSignChanges = 3;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CriterionResult figure_criterion(int id, int figure, double lo, double hi, double budget,
                                 const AcceptanceConfig& cfg) {
  CriterionResult r{id, "Figure " + std::to_string(figure) + " reproduction"};
  const auto t0 = Clock::now();
  const FigureResult fr = reproduce_figure(builtin_figure(figure), cfg.n);
  const double secs = since(t0);
  const bool in_window = fr.computed_ratio >= lo && fr.computed_ratio <= hi;
  r.pass = in_window && secs < budget;
  std::ostringstream d;
  d << "ratio " << brief(fr.computed_ratio) << " window [" << brief(lo) << ", " << brief(hi)
    << "], subspace minimum " << brief(fr.subspace_min_ratio) << ", " << brief(secs) << " s (budget "
    << budget << " s)";
  r.detail = d.str();
  r.data = to_json(fr);
  r.data["seconds"] = secs;
  return r;
}

CriterionResult c4(const AcceptanceConfig& cfg) {
  CriterionResult r{4, "Eigenfunction coincidence"};
  struct Pair {
    OperatorKind op;
    DiffOpSpec diff;
    std::string label;
  };
  const std::vector<Pair> pairs{{make_laplace(1, 2), BerteroGrunbaum{Interval(1, 2)}, "laplace/bg"},
                                {make_fourier(), Prolate{}, "fourier/prolate"}};
  r.pass = true;
  r.data = Json::array();
  std::ostringstream d;
  for (const auto& p : pairs) {
    const OperatorMatrix mat = gram_matrix(p.op, make_grid(input_domain(p.op), cfg.n));
    const GalerkinOperator diff = assemble(p.diff, cfg.N);
    const int converged = converged_mode_count(p.diff, cfg.N);
    const MatchReport rep = match_eigenfunctions(mat, diff, kMatchModes, converged);
    double worst = 0;
    for (const auto& m : rep.modes) worst = std::max(worst, m.relative_residual);
    const bool ok = int(rep.modes.size()) >= kMatchModes && worst <= kMatchResidual &&
                    rep.commutation_residual <= kCommutation;
    r.pass = r.pass && ok;
    d << p.label << ": max residual " << brief(worst) << ", commutation "
      << brief(rep.commutation_residual) << "; ";
    r.data.push_back(to_json(rep));
  }
  r.detail = d.str() + "limits " + brief(kMatchResidual) + " / " + brief(kCommutation);
  return r;
}

CriterionResult c5(const AcceptanceConfig& cfg) {
  CriterionResult r{5, "Exponential singular-value decay"};
  const auto t0 = Clock::now();
  const Interval ab(1, 2);
  const OperatorMatrix mat = gram_matrix(LaplaceTT{ab}, make_grid(ab, cfg.n));
  const SpectralDecomposition spec =
      commuting_spectrum(mat, assemble_bertero_grunbaum(ab, cfg.N), kLaplaceModes);
  const DecayFit fit = fit_decay(spec, DecayModel::ExpDecay, 2, kLaplaceModes);
  const double secs = since(t0);
  r.pass = fit.r_squared >= kLaplaceR2 && fit.c2 > 0 && secs < kLaplaceRuntime;
  r.detail = "r2 " + brief(fit.r_squared) + ", c2 " + brief(fit.c2) + " over n in [2," +
             std::to_string(kLaplaceModes) + "], " + brief(secs) + " s";
  r.data = Json{{"fit", to_json(fit)}, {"spectrum", to_json(spec)}, {"seconds", secs}};
  return r;
}

CriterionResult c6(const AcceptanceConfig& cfg) {
  CriterionResult r{6, "Superexponential Fourier decay"};
  const OperatorMatrix mat = gram_matrix(make_fourier(), make_grid(Interval(-1, 1), cfg.n));
  const int converged = converged_mode_count(Prolate{}, cfg.N);
  const SpectralDecomposition spec = commuting_spectrum(mat, assemble_prolate(cfg.N), converged);
  const DecayFit w1 = fit_decay(spec, DecayModel::SuperExp, 4, 12);
  const DecayFit w2 = fit_decay(spec, DecayModel::SuperExp, 8, 16);
  const double spread = std::abs(w1.slope - w2.slope) / std::max(std::abs(w1.slope), std::abs(w2.slope));
  bool increasing = true;
  double prev = 0;
  for (int i = 0; i + 1 < spec.eigenvalues.size(); ++i) {
    const double q = spec.eigenvalues[i] / spec.eigenvalues[i + 1];
    if (i > 0 && !(q > prev)) increasing = false;
    prev = q;
  }
  r.pass = w1.slope < 0 && w2.slope < 0 && spread <= kWindowAgreement && increasing;
  r.detail = "slopes " + brief(w1.slope) + " [4,12] and " + brief(w2.slope) + " [8,16], spread " +
             brief(spread) + ", ratios increasing over " + std::to_string(converged) +
             " converged modes: " + (increasing ? "yes" : "no");
  r.data = Json{{"window_4_12", to_json(w1)}, {"window_8_16", to_json(w2)}, {"spectrum", to_json(spec)}};
  return r;
}

CriterionResult c7(const AcceptanceConfig& cfg) {
  CriterionResult r{7, "Eigenvalue growth"};
  const std::vector<DiffOpSpec> specs{BerteroGrunbaum{Interval(1, 2)}, Prolate{}};
  r.pass = true;
  r.data = Json::array();
  std::ostringstream d;
  for (const auto& s : specs) {
    double g[2];
    for (int k = 0; k < 2; ++k) {
      const int N = cfg.N << k;
      g[k] = growth_check(diff_spectrum(assemble(s, N)).leading(converged_mode_count(s, N)));
    }
    const double drift = std::abs(g[0] - g[1]) / std::abs(g[1]);
    r.pass = r.pass && g[0] > 0 && g[1] > 0 && drift <= kGrowthStability;
    d << to_string(s) << " " << brief(g[0]) << " -> " << brief(g[1]) << " (drift " << brief(drift) << "); ";
    r.data.push_back({{"diff", to_string(s)}, {"growth_N", g[0]}, {"growth_2N", g[1]}, {"drift", drift}});
  }
  r.detail = d.str() + "N " + std::to_string(cfg.N) + " -> " + std::to_string(2 * cfg.N);
  return r;
}

CriterionResult c8(const AcceptanceConfig& cfg) {
  CriterionResult r{8, "Gramian subspace decay"};
  const Interval I(0, 1);
  const OperatorKind op = make_hilbert(I, Interval(2, 3));
  const QuadGrid grid = make_grid(I, cfg.n);
  std::vector<double> x, y;
  bool decreasing = true;
  for (int n = kGramianFirst; n <= kGramianLast; ++n) {
    const GramianReport g = build_gramian(op, make_basis("sine", I, n), grid);
    if (!y.empty() && !(std::log(g.min_eigenvalue) < y.back())) decreasing = false;
    x.push_back(n);
    y.push_back(std::log(g.min_eigenvalue));
  }
  const LineFit fit = least_squares_line(x, y);
  r.pass = decreasing && fit.slope < 0 && fit.r_squared >= kGramianR2;
  r.detail = "log min eig slope " + brief(fit.slope) + ", r2 " + brief(fit.r_squared) +
             ", strictly decreasing: " + (decreasing ? "yes" : "no");
  r.data = Json{{"n", x}, {"log_min_eigenvalue", y}, {"slope", fit.slope}, {"r_squared", fit.r_squared}};
  return r;
}

SuiteOptions suite_options(const AcceptanceConfig& cfg) {
  SuiteOptions o;
  o.n = cfg.n;
  o.N = cfg.N;
  o.m = cfg.m;
  o.seed = cfg.seed;
  return o;
}

CriterionResult c9(const AcceptanceConfig& cfg) {
  CriterionResult r{9, "Lemma 1 property suite"};
  const SuiteReport s = lemma_suite(1, suite_options(cfg));
  r.pass = s.violations == 0 && s.errors == 0;
  r.detail = std::to_string(s.checked) + " functions, " + std::to_string(s.violations) +
             " violations, " + std::to_string(s.errors) + " errors; " + s.summary;
  r.data = s.json;
  return r;
}

CriterionResult c10(const AcceptanceConfig& cfg) {
  CriterionResult r{10, "Lemma 2 and Lemma 3 property suites"};
  const SuiteReport s2 = lemma_suite(2, suite_options(cfg));
  const SuiteReport s3 = lemma_suite(3, suite_options(cfg));
  r.pass = s2.violations + s2.errors + s3.violations + s3.errors == 0;
  r.detail = "lemma 2: " + std::to_string(s2.violations) + " of " + std::to_string(s2.checked) +
             " violated (" + s2.summary + "); lemma 3: " + std::to_string(s3.violations) + " of " +
             std::to_string(s3.checked) + " violated, " + std::to_string(s3.errors) + " errors (" +
             s3.summary + ")";
  r.data = Json{{"lemma2", s2.json}, {"lemma3", s3.json}};
  return r;
}

CriterionResult c11(const AcceptanceConfig& cfg) {
  CriterionResult r{11, "Theorem 1/2/3 ensemble verification"};
  r.pass = true;
  r.data = Json::object();
  std::ostringstream d;
  for (int k = 1; k <= 3; ++k) {
    const SuiteReport s = theorem_suite(k, suite_options(cfg));
    r.pass = r.pass && s.violations == 0 && s.errors == 0;
    d << "T" << k << " " << s.violations << "/" << s.checked << " violated (" << s.summary << "); ";
    r.data["theorem" + std::to_string(k)] = Json{{"fit", to_json(s.fit)}, {"violations", s.violations},
                                                 {"errors", s.errors}, {"checked", s.checked}};
  }
  const EigenSweep sweep = eigen_sweep(make_fourier(), assemble_prolate(cfg.N), cfg.m, cfg.n);
  std::vector<double> y;
  for (double v : sweep.lhs) y.push_back(std::log(v));
  const StabilityFit power = fit_stability_model(sweep.h1_ratio, y, StabilityForm::PowerOfRatio);
  const StabilityFit expo = fit_stability_model(sweep.h1_ratio, y, StabilityForm::Exponential);
  const bool power_wins = power.r_squared > expo.r_squared;
  r.pass = r.pass && power_wins;
  d << "Fourier family r2 PowerOfRatio " << brief(power.r_squared) << " vs Exponential "
    << brief(expo.r_squared) << (power_wins ? " (power form wins)" : " (exponential form wins)");
  r.detail = d.str();
  r.data["fourier_form_comparison"] = {{"power_of_ratio_r2", power.r_squared},
                                       {"exponential_r2", expo.r_squared}};
  return r;
}

CriterionResult c12(const AcceptanceConfig& cfg) {
  CriterionResult r{12, "Sharpness evidence"};
  const Interval ab(1, 2);
  const StabilityFit fit = fit_constants(LaplaceTT{ab}, assemble_bertero_grunbaum(ab, cfg.N), cfg.m, cfg.n);
  // residuals are indexed from n = 1
  const int last = std::min<int>(12, int(fit.residuals.size()));
  const std::vector<double> window(fit.residuals.begin() + 1, fit.residuals.begin() + last);
  const int changes = sign_changes(window);
  r.pass = changes >= kMinSignChanges;
  std::ostringstream d;
  d << changes << " sign changes over n in [2," << last << "] (need " << kMinSignChanges << "); residuals";
  for (double v : window) d << " " << brief(v);
  r.detail = d.str();
  r.data = Json{{"fit", to_json(fit)}, {"residuals", fit.residuals}, {"sign_changes", changes}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = figure_criterion(1, 2, 1e-8 / 30, 30e-8, kFigureRuntime, cfg); break;
      case 2: r = figure_criterion(2, 1, 1e-7 / 30, 30e-7, kFigureRuntime, cfg); break;
      case 3: r = figure_criterion(3, 3, kFigure3Low, kFigure3High, kFigure3Runtime, cfg); break;
      case 4: r = c4(cfg); break;
      case 5: r = c5(cfg); break;
      case 6: r = c6(cfg); break;
      case 7: r = c7(cfg); break;
      case 8: r = c8(cfg); break;
      case 9: r = c9(cfg); break;
      case 10: r = c10(cfg); break;
      case 11: r = c11(cfg); break;
      case 12: r = c12(cfg); break;
      default: throw InvalidArgument("unknown criterion " + std::to_string(id));
    }
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, cfg));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  return "[criterion " + std::to_string(r.id) + "] " + (r.pass ? "PASS" : "FAIL") + ": " + r.name +
         ": " + r.detail;
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
              {"seconds", r.seconds}, {"data", r.data}};
}

}  // namespace illposed::app
