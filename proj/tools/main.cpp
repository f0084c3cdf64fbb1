#include <iostream>

#include <CLI11.hpp>

#include "illposed_app/run.hpp"

int main(int argc, char** argv) {
  using illposed::app::RunConfig;
  RunConfig cfg;
  CLI::App app{"Truncated transform spectra, worst-case functions and stability checks"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool grid_flag_is_n) {
    if (grid_flag_is_n) sub->add_option("--n", cfg.n, "quadrature nodes (<= 1024)");
    sub->add_option("--N", cfg.N, "Galerkin trial size (<= 512)");
    sub->add_option("--m", cfg.m, "mode count");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--out", cfg.out_dir, "output directory (ILLPOSED_OUT_DIR overrides)");
    sub->add_option("--a", cfg.a, "left end for bare laplace operators");
    sub->add_option("--b", cfg.b, "right end for bare laplace operators");
    sub->add_flag("--no-svg", [&](std::int64_t) { cfg.write_svg = false; }, "skip SVG plots");
  };

  auto* spectrum = app.add_subcommand("spectrum", "integral-operator eigenvalues as CSV");
  spectrum->add_option("--op", cfg.op, "operator, e.g. laplace:a=1,b=2")->required();
  spectrum->add_option("--diff", cfg.diff, "commuting operator: bg, prolate, fourth:proof, fourth:lemma");
  spectrum->add_option("--method", cfg.method, "auto, direct or commuting");
  common(spectrum, true);

  auto* match = app.add_subcommand("match", "match integral and differential eigenfunctions");
  match->add_option("--op", cfg.op, "operator")->required();
  match->add_option("--diff", cfg.diff, "commuting operator");
  common(match, true);

  auto* adversarial = app.add_subcommand("adversarial", "worst function in a basis span via the Gramian");
  adversarial->add_option("--op", cfg.op, "operator")->required();
  adversarial->add_option("--basis", cfg.basis, "sine, cosine, legendre or laguerre");
  adversarial->add_option("--n", cfg.basis_size, "basis size");
  adversarial->add_option("--grid", cfg.n, "quadrature nodes (<= 1024)");
  common(adversarial, false);

  auto* figures = app.add_subcommand("figures", "reproduce the printed worst-case figures");
  figures->add_option("--id", cfg.figure_id, "1, 2 or 3 (default: all)");
  common(figures, true);

  auto* verify = app.add_subcommand("verify", "stability inequality suites");
  verify->add_option("--theorem", cfg.theorem, "1, 2 or 3");
  verify->add_option("--lemma", cfg.lemma, "1, 2 or 3");
  verify->add_option("--count", cfg.count, "ensemble size (default per suite)");
  common(verify, true);

  auto* report = app.add_subcommand("report-all", "run the full acceptance suite");
  common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : illposed::app::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  const int code = illposed::app::run(cfg, std::cout, std::cerr);
  if (code == illposed::app::kExitUsage) std::cerr << app.get_subcommands().front()->help();
  return code;
}
