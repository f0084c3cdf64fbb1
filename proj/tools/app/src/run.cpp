#include "illposed_app/run.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "illposed/adversarial.hpp"
#include "illposed/errors.hpp"
#include "illposed/io.hpp"
#include "illposed/norms.hpp"
#include "illposed_app/acceptance.hpp"
#include "illposed_app/suites.hpp"
#include "illposed_app/svg.hpp"

namespace illposed::app {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const RunConfig& cfg;
  std::filesystem::path dir;
  std::ostream& out;
  std::ostream& err;

  void write(const std::string& name, const std::string& content) const { write_text(dir / name, content); }
};

OperatorKind parse_op(const RunConfig& cfg) {
  if (cfg.op.empty()) throw UsageError("--op is required");
  std::string text = cfg.op;
  if (text == "laplace" || text == "laplace-adjoint")
    text += ":a=" + format_real(cfg.a) + ",b=" + format_real(cfg.b);
  try {
    return parse_operator_kind(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::optional<DiffOpSpec> partner(const RunConfig& cfg, const OperatorKind& op) {
  try {
    if (!cfg.diff.empty()) {
      const Interval ab = bounding_interval(input_domain(op));
      if (std::holds_alternative<LaplaceTT>(op) || std::holds_alternative<LaplaceAdjointTT>(op)) {
        const Interval& iv = std::holds_alternative<LaplaceTT>(op) ? std::get<LaplaceTT>(op).ab
                                                                   : std::get<LaplaceAdjointTT>(op).ab;
        return parse_diff_op(cfg.diff, iv.a, iv.b);
      }
      return parse_diff_op(cfg.diff, ab.a, ab.b);
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (const auto* l = std::get_if<LaplaceTT>(&op)) return BerteroGrunbaum{l->ab};
  if (const auto* l = std::get_if<LaplaceAdjointTT>(&op))
    return FourthOrderHalfLine{l->ab, l->half, SignVariant::AsProofBound};
  if (std::holds_alternative<FourierTT>(op)) return Prolate{};
  return std::nullopt;
}

int trial_size(const RunConfig& cfg, const DiffOpSpec& spec) {
  return std::holds_alternative<FourthOrderHalfLine>(spec) ? std::min(cfg.N, kMaxHalfLineTrial) : cfg.N;
}

int cmd_spectrum(const Context& c) {
  const OperatorKind op = parse_op(c.cfg);
  const OperatorMatrix mat = gram_matrix(op, make_grid(input_domain(op), c.cfg.n));
  const auto diff = partner(c.cfg, op);
  const bool chain_ok = diff && (std::holds_alternative<LaplaceTT>(op) || std::holds_alternative<FourierTT>(op));
  std::string method = c.cfg.method;
  if (method == "auto") method = chain_ok ? "commuting" : "direct";
  SpectralDecomposition spec;
  if (method == "commuting") {
    if (!chain_ok) throw UsageError("--method commuting needs laplace or fourier with its partner operator");
    spec = commuting_spectrum(mat, assemble(*diff, c.cfg.N), c.cfg.m);
  } else if (method == "direct") {
    const SpectralDecomposition all = eig_sym(mat.entries, SpectrumOrder::DescendingIntegral, to_string(op));
    int keep = 0;
    while (keep < all.eigenvalues.size() &&
           all.eigenvalues[keep] > all.relative_floor * std::abs(all.eigenvalues[0]))
      ++keep;
    spec = all.leading(keep);
  } else {
    throw UsageError("--method must be auto, direct or commuting");
  }
  std::ostringstream csv;
  write_spectrum_csv(csv, spec);
  c.write("spectrum.csv", csv.str());
  c.out << csv.str();
  if (c.cfg.write_svg) {
    PlotSeries s{"log10 mu_n", {}, {}, true};
    for (int i = 0; i < spec.eigenvalues.size(); ++i) {
      s.x.push_back(i + 1);
      s.y.push_back(std::log10(spec.eigenvalues[i]));
    }
    c.write("spectrum.svg", render_svg({"Spectrum of " + to_string(op), "n", "log10 mu_n", {s}}));
  }
  bool ordered = spec.eigenvalues.size() > 0;
  for (int i = 0; i < spec.eigenvalues.size(); ++i)
    if (!(spec.eigenvalues[i] > 0) || (i > 0 && !(spec.eigenvalues[i] < spec.eigenvalues[i - 1])))
      ordered = false;
  return ordered ? kExitPass : kExitCheckFailed;
}

int cmd_match(const Context& c) {
  const OperatorKind op = parse_op(c.cfg);
  const auto diff = partner(c.cfg, op);
  if (!diff) throw UsageError("no commuting differential operator for " + to_string(op));
  const int N = trial_size(c.cfg, *diff);
  const OperatorMatrix mat = gram_matrix(op, make_grid(input_domain(op), c.cfg.n));
  const int converged = converged_mode_count(*diff, N);
  const MatchReport rep = match_eigenfunctions(mat, assemble(*diff, N), c.cfg.m, converged);
  double worst = 0;
  for (const auto& m : rep.modes) worst = std::max(worst, m.relative_residual);
  const bool pass = int(rep.modes.size()) == c.cfg.m && worst <= 1e-6 && rep.commutation_residual <= 1e-8;
  Json j{{"schema", kSchema}, {"command", "match"}, {"operator", to_string(op)}, {"n", c.cfg.n}, {"N", N}};
  j["report"] = to_json(rep);
  j["max_relative_residual"] = worst;
  j["pass"] = pass;
  const std::string text = dump_json(j);
  c.write("match.json", text);
  c.out << text << '\n';
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_adversarial(const Context& c) {
  const OperatorKind op = parse_op(c.cfg);
  if (c.cfg.basis_size < 1) throw UsageError("--n must be positive");
  Domain dom = input_domain(op);
  const std::vector<FunctionRep> basis = make_basis(c.cfg.basis, dom, c.cfg.basis_size);
  const QuadGrid grid = make_grid(dom, c.cfg.n);
  const GramianReport rep = build_gramian(op, basis, grid);
  const FunctionRep worst = worst_function(rep);
  Json j{{"schema", kSchema}, {"command", "adversarial"}, {"operator", to_string(op)}, {"grid", c.cfg.n}};
  j["gramian"] = to_json(rep);
  j["worst_function"] = worst.to_json();
  j["ratio_check"] = quadratic_form(gram_matrix(op, grid), worst) / std::pow(l2_norm(worst, grid), 2);
  const std::string text = dump_json(j);
  c.write("adversarial.json", text);
  c.out << text << '\n';

  const Interval iv = bounding_interval(dom);
  std::vector<double> x(512), y(512);
  for (int i = 0; i < 512; ++i) {
    x[i] = iv.a + iv.length() * i / 511.0;
    y[i] = worst(x[i]);
  }
  std::ostringstream csv;
  write_pairs_csv(csv, "x,f", x, y);
  c.write("worst_function.csv", csv.str());
  if (c.cfg.write_svg)
    c.write("worst_function.svg",
            render_svg({"Worst function, " + rep.basis_descriptor, "x", "f(x)", {{"f", x, y}}}));
  return kExitPass;
}

int cmd_figures(const Context& c) {
  std::vector<int> ids;
  if (c.cfg.figure_id == 0) ids = {1, 2, 3};
  else if (c.cfg.figure_id >= 1 && c.cfg.figure_id <= 3) ids = {c.cfg.figure_id};
  else throw UsageError("--id must be 1, 2 or 3");
  bool all = true;
  Json figs = Json::array();
  for (int id : ids) {
    const FigureSpec spec = builtin_figure(id);
    const FigureResult r = reproduce_figure(spec, c.cfg.n);
    all = all && r.pass;
    figs.push_back(to_json(r));
    if (c.cfg.write_svg) {
      const FunctionRep f = figure_function(spec);
      PlotSeries s{"f", {}, {}};
      for (int i = 0; i < 512; ++i) {
        const double x = spec.domain.a + spec.domain.length() * i / 511.0;
        s.x.push_back(x);
        s.y.push_back(f(x));
      }
      c.write("figure" + std::to_string(id) + ".svg",
              render_svg({"Figure " + std::to_string(id) + " function", "x", "f(x)", {s}}));
    }
  }
  Json j{{"schema", kSchema}, {"command", "figures"}};
  if (ids.size() == 1) {
    for (auto& [k, v] : figs[0].items()) j[k] = v;
  } else {
    j["figures"] = figs;
    j["pass"] = all;
  }
  const std::string text = dump_json(j);
  c.write(ids.size() == 1 ? "figure" + std::to_string(ids[0]) + ".json" : "figures.json", text);
  c.out << text << '\n';
  return all ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const Context& c) {
  if ((c.cfg.theorem == 0) == (c.cfg.lemma == 0)) throw UsageError("give exactly one of --theorem or --lemma");
  SuiteOptions opt;
  opt.n = c.cfg.n;
  opt.N = c.cfg.N;
  opt.m = c.cfg.m;
  opt.seed = c.cfg.seed;
  opt.count = c.cfg.count;
  const bool theorem = c.cfg.theorem != 0;
  const int k = theorem ? c.cfg.theorem : c.cfg.lemma;
  if (k < 1 || k > 3) throw UsageError("theorem and lemma numbers run from 1 to 3");
  const SuiteReport rep = theorem ? theorem_suite(k, opt) : lemma_suite(k, opt);
  const std::string stem = std::string(theorem ? "theorem" : "lemma") + std::to_string(k);
  const std::string text = dump_json(rep.json);
  c.write(stem + ".json", text);
  c.out << text << '\n';
  if (theorem) {
    std::ostringstream csv;
    write_pairs_csv(csv, "h1_ratio,log_lhs", rep.fit.h1_ratio, rep.fit.log_lhs);
    c.write(stem + "_sweep.csv", csv.str());
    if (c.cfg.write_svg) {
      PlotSeries pts{"eigenfunction sweep", rep.fit.h1_ratio, rep.fit.log_lhs, true};
      PlotSeries model{"fit", rep.fit.h1_ratio, {}};
      for (std::size_t i = 0; i < rep.fit.h1_ratio.size(); ++i)
        model.y.push_back(rep.fit.log_lhs[i] - rep.fit.residuals[i]);
      c.write(stem + "_sweep.svg", render_svg({stem + " constant fit", "h1 ratio", "log lhs", {pts, model}}));
    }
  }
  return rep.violations == 0 && rep.errors == 0 ? kExitPass : kExitCheckFailed;
}

int cmd_report_all(const Context& c) {
  AcceptanceConfig acfg;
  acfg.n = c.cfg.n;
  acfg.N = c.cfg.N;
  acfg.m = c.cfg.m;
  acfg.seed = c.cfg.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_acceptance(acfg, [&](const CriterionResult& r) { c.out << format_line(r) << std::endl; });
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = total <= kTotalRuntimeBudget;
  c.out << "[runtime] " << (in_budget ? "PASS" : "FAIL") << ": total " << brief(total) << " s (budget "
        << kTotalRuntimeBudget << " s)" << std::endl;
  bool all = in_budget;
  Json list = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    list.push_back(to_json(r));
  }
  Json j{{"schema", kSchema}, {"command", "report-all"}, {"seed", c.cfg.seed}, {"n", c.cfg.n}, {"N", c.cfg.N},
         {"m", c.cfg.m}, {"criteria", list}, {"total_seconds", total}, {"runtime_pass", in_budget},
         {"pass", all}};
  c.write("report.json", dump_json(j));
  return all ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 2 || cfg.n > kMaxGrid) throw UsageError("--n must lie in [2, " + std::to_string(kMaxGrid) + "]");
    if (cfg.N < 1 || cfg.N > kMaxGalerkin) throw UsageError("--N must lie in [1, " + std::to_string(kMaxGalerkin) + "]");
    if (cfg.m < 1) throw UsageError("--m must be positive");
    std::filesystem::path dir = cfg.out_dir;
    if (const char* env = std::getenv("ILLPOSED_OUT_DIR"); env && *env) dir = env;
    std::filesystem::create_directories(dir);
    const Context c{cfg, dir, out, err};
    if (cfg.command == "spectrum") return cmd_spectrum(c);
    if (cfg.command == "match") return cmd_match(c);
    if (cfg.command == "adversarial") return cmd_adversarial(c);
    if (cfg.command == "figures") return cmd_figures(c);
    if (cfg.command == "verify") return cmd_verify(c);
    if (cfg.command == "report-all") return cmd_report_all(c);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace illposed::app
