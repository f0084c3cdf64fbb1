#include "illposed_app/suites.hpp"

#include <algorithm>
#include <sstream>

#include "illposed/ensembles.hpp"
#include "illposed/errors.hpp"
#include "illposed/norms.hpp"

namespace illposed::app {

namespace {

constexpr int kLemma1Count = 200;
constexpr int kLemma23Count = 1000;
constexpr int kTheoremCount = 500;
constexpr int kLemma1MaxDegree = 12;
constexpr int kTheorem3MaxDegree = 12;
constexpr int kLemmaGrid = 64;

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

Json lemma1_block(const GalerkinOperator& op, const Interval& domain, int count, Rng& rng,
                  SuiteReport& rep) {
  const SpectralDecomposition dec = diff_spectrum(op);
  const int converged = converged_mode_count(op.spec, op.basis.size);
  const auto ensemble = random_mean_zero_series(rng, count, domain, kLemma1MaxDegree);
  const Lemma1Constants k = lemma1_constants(op, dec, converged, ensemble, 0);
  Json records = Json::array();
  double min_mass = 1.0;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    Json rec{{"id", "f" + std::to_string(i)}};
    try {
      const Lemma1Result r = verify_lemma1(ensemble[i], op, dec, converged, k.c);
      rec["low_freq_mass"] = r.low_freq_mass;
      rec["threshold_index"] = r.threshold_index;
      rec["pass"] = r.pass;
      min_mass = std::min(min_mass, r.low_freq_mass);
      rep.violations += !r.pass;
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      ++rep.errors;
    }
    ++rep.checked;
    records.push_back(std::move(rec));
  }
  return Json{{"diff_operator", to_string(op.spec)},
              {"trial_size", op.basis.size},
              {"converged_modes", converged},
              {"growth", k.growth},
              {"dirichlet", k.dirichlet},
              {"c", k.c},
              {"min_low_freq_mass", min_mass},
              {"records", std::move(records)}};
}

}  // namespace

std::uint64_t suite_seed(std::uint64_t seed, bool theorem, int k) {
  return seed + (theorem ? 200 : 100) + std::uint64_t(k);
}

SuiteReport lemma_suite(int k, const SuiteOptions& opt) {
  if (k < 1 || k > 3) throw InvalidArgument("lemma must be 1, 2 or 3");
  Rng rng(suite_seed(opt.seed, false, k));
  SuiteReport rep;
  rep.json = Json{{"schema", kSchema}, {"lemma", k}, {"seed", opt.seed}};
  std::ostringstream summary;
  if (k == 1) {
    const int count = pick(opt.count, kLemma1Count);
    const Interval ab(1.0, 2.0);
    Json blocks = Json::array();
    blocks.push_back(lemma1_block(assemble_bertero_grunbaum(ab, opt.N), ab, count, rng, rep));
    blocks.push_back(lemma1_block(assemble_prolate(opt.N), Interval(-1.0, 1.0), count, rng, rep));
    summary << "BG c=" << brief(blocks[0]["c"].get<double>())
            << " min mass " << brief(blocks[0]["min_low_freq_mass"].get<double>())
            << "; prolate c=" << brief(blocks[1]["c"].get<double>()) << " min mass "
            << brief(blocks[1]["min_low_freq_mass"].get<double>());
    rep.json["operators"] = std::move(blocks);
  } else if (k == 2) {
    const auto ensemble = random_interval_series(rng, pick(opt.count, kLemma23Count));
    Json records = Json::array();
    int applicable = 0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
      const Lemma2Result r = verify_lemma2(ensemble[i], make_grid(ensemble[i].domain(), kLemmaGrid));
      records.push_back({{"id", "f" + std::to_string(i)},
                         {"sup_norm", r.sup_norm},
                         {"bound", r.bound},
                         {"applicable", r.applicable},
                         {"pass", r.pass}});
      applicable += r.applicable;
      rep.violations += !r.pass;
      ++rep.checked;
    }
    summary << applicable << " sign-changing of " << ensemble.size();
    rep.json["records"] = std::move(records);
  } else {
    const auto ensemble = random_nonnegative(rng, pick(opt.count, kLemma23Count));
    Json records = Json::array();
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
      const double c2 = rng.uniform(0.2, 5.0);
      Json rec{{"id", "f" + std::to_string(i)}, {"c2", c2}};
      try {
        const Lemma3Result r = verify_lemma3(ensemble[i], make_grid(ensemble[i].domain(), kLemmaGrid), c2);
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["c1"] = r.c1;
        rec["pass"] = r.pass;
        if (r.rhs > 0) min_ratio = std::min(min_ratio, r.lhs / r.rhs);
        rep.violations += !r.pass;
      } catch (const std::exception& e) {
        rec["error"] = e.what();
        ++rep.errors;
      }
      ++rep.checked;
      records.push_back(std::move(rec));
    }
    summary << "min lhs/rhs " << brief(min_ratio);
    rep.json["records"] = std::move(records);
  }
  rep.json["violations"] = rep.violations;
  rep.json["errors"] = rep.errors;
  rep.summary = summary.str();
  return rep;
}

SuiteReport theorem_suite(int k, const SuiteOptions& opt) {
  if (k < 1 || k > 3) throw InvalidArgument("theorem must be 1, 2 or 3");
  Rng rng(suite_seed(opt.seed, true, k));
  const int count = pick(opt.count, kTheoremCount);
  const Interval ab(1.0, 2.0);
  OperatorKind op = make_fourier();
  std::vector<FunctionRep> ensemble;
  SuiteReport rep;
  if (k == 1) {
    op = LaplaceTT{ab};
    rep.fit = fit_constants(op, assemble_bertero_grunbaum(ab, opt.N), opt.m, opt.n);
    ensemble = random_sine_series(rng, count, ab);
  } else if (k == 2) {
    const HalfLineDomain half = HalfLineDomain::for_laplace(ab.a);
    op = LaplaceAdjointTT{ab, half};
    const FourthOrderHalfLine spec{ab, half, SignVariant::AsProofBound};
    rep.fit = fit_constants(op, assemble(spec, std::min(opt.N, kMaxHalfLineTrial)), opt.m, opt.n);
    ensemble = random_poly_exp(rng, count, half);
  } else {
    op = make_fourier();
    rep.fit = fit_constants(op, assemble_prolate(opt.N), opt.m, opt.n);
    ensemble = random_legendre_series(rng, count, Interval(-1.0, 1.0), kTheorem3MaxDegree);
  }
  const auto records = verify_theorem(op, rep.fit, ensemble, opt.n);
  rep.checked = int(records.size());
  rep.violations = violation_count(records);
  rep.errors = int(std::count_if(records.begin(), records.end(), [](const auto& r) { return bool(r.error); }));
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(to_json(r));
  rep.json = Json{{"schema", kSchema},
                  {"theorem", k},
                  {"operator", to_string(op)},
                  {"seed", opt.seed},
                  {"fit", to_json(rep.fit)},
                  {"relaxation", {{"c1", kPrefactorRelaxation}, {"c2", kRateRelaxation}}},
                  {"records", std::move(recs)},
                  {"violations", rep.violations},
                  {"errors", rep.errors}};
  std::ostringstream summary;
  summary << to_string(rep.fit.form) << " c1=" << brief(rep.fit.c1)
          << " c2=" << brief(rep.fit.c2) << " r2=" << brief(rep.fit.r_squared);
  rep.summary = summary.str();
  return rep;
}

}  // namespace illposed::app
