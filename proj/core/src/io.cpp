#include "illposed/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "illposed/errors.hpp"

namespace illposed {

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(std::size_t(indent) * (depth + 1), ' ') : "";
  const std::string close = indent > 0 ? std::string(std::size_t(indent) * depth, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::number_float:
      os << format_real(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        dump(os, v, indent, depth + 1);
      }
      os << nl << close << ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump(os, it.value(), indent, depth + 1);
      }
      os << nl << close << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

Json vec(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  dump(os, j, indent, 0);
  return os.str();
}

Json to_json(const MatchReport& r) {
  Json j;
  j["integral"] = r.integral_source;
  j["diff"] = r.diff_source;
  j["converged_modes"] = r.converged_modes;
  j["commutation_residual"] = r.commutation_residual;
  double worst = 0;
  Json modes = Json::array();
  for (const auto& m : r.modes) {
    worst = std::max(worst, m.relative_residual);
    modes.push_back({{"n", m.n},
                     {"lambda", m.lambda},
                     {"rayleigh", m.rayleigh},
                     {"residual", m.residual},
                     {"relative_residual", m.relative_residual}});
  }
  j["max_relative_residual"] = worst;
  j["modes"] = modes;
  return j;
}

Json to_json(const DecayFit& f) {
  Json j;
  j["model"] = to_string(f.model);
  if (f.model == DecayModel::ExpDecay) {
    j["c1"] = f.c1;
    j["c2"] = f.c2;
  } else {
    j["slope"] = f.slope;
  }
  j["intercept"] = f.intercept;
  j["r_squared"] = f.r_squared;
  j["n_range"] = {f.first, f.last};
  j["modes_used"] = f.used;
  return j;
}

Json to_json(const SpectralDecomposition& d, bool with_vectors) {
  Json j;
  j["source"] = d.source;
  j["order"] = d.order == SpectrumOrder::AscendingDiff ? "AscendingDiff" : "DescendingIntegral";
  j["relative_floor"] = d.relative_floor;
  j["eigenvalues"] = vec(d.eigenvalues);
  if (with_vectors) {
    Json cols = Json::array();
    for (Eigen::Index c = 0; c < d.eigenvectors.cols(); ++c) cols.push_back(vec(d.eigenvectors.col(c)));
    j["eigenvectors"] = cols;
  }
  return j;
}

Json to_json(const GramianReport& r) {
  Json j;
  j["basis"] = r.basis_descriptor;
  j["size"] = r.basis.size();
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["minimizer_coefficients"] = vec(r.minimizer);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < r.gramian.rows(); ++i) rows.push_back(vec(r.gramian.row(i).transpose()));
  j["gramian"] = rows;
  return j;
}

Json to_json(const FigureResult& r) {
  Json j;
  j["figure"] = int(r.figure_id);
  j["computed_ratio"] = r.computed_ratio;
  j["claimed_ratio"] = r.claimed_ratio;
  j["tolerance_factor"] = r.tolerance_factor;
  j["pass"] = r.pass;
  j["subspace_min_ratio"] = r.subspace_min_ratio;
  j["subspace_minimizer"] = vec(r.subspace_minimizer);
  return j;
}

Json to_json(const StabilityFit& f) {
  Json j;
  j["c1"] = f.c1;
  j["c2"] = f.c2;
  j["form"] = to_string(f.form);
  j["r2"] = f.r_squared;
  j["ensemble"] = f.ensemble_descriptor;
  return j;
}

Json to_json(const StabilityRecord& r) {
  Json j;
  j["id"] = r.function_id;
  j["lhs"] = r.lhs;
  j["h1_ratio"] = r.h1_ratio;
  j["rhs"] = r.rhs_at_fit;
  j["satisfied"] = r.satisfied;
  if (r.error) j["error"] = *r.error;
  return j;
}

void write_spectrum_csv(std::ostream& os, const SpectralDecomposition& d) {
  os << "n,eigenvalue\n";
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i)
    os << (i + 1) << ',' << format_real(d.eigenvalues[i]) << '\n';
}

void write_stiffness_csv(std::ostream& os, const GalerkinOperator& op) {
  os << "# op=" << to_string(op.spec) << " N=" << op.basis.size << '\n';
  for (Eigen::Index i = 0; i < op.stiffness.rows(); ++i) {
    for (Eigen::Index j = 0; j < op.stiffness.cols(); ++j)
      os << (j ? "," : "") << format_real(op.stiffness(i, j));
    os << '\n';
  }
}

void write_pairs_csv(std::ostream& os, const std::string& header, const std::vector<double>& x,
                     const std::vector<double>& y) {
  os << header << '\n';
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    os << format_real(x[i]) << ',' << format_real(y[i]) << '\n';
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << content;
}

}  // namespace illposed
