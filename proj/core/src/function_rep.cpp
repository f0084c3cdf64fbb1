#include "illposed/function_rep.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "illposed/errors.hpp"

namespace illposed {

namespace {

void require_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidArgument("function payload must be finite");
}

}  // namespace

FunctionRep::FunctionRep(RepKind kind, Interval domain, std::vector<double> payload,
                         BasisConvention conv, double scale)
    : kind_(kind), domain_(domain), payload_(std::move(payload)), convention_(conv), scale_(scale) {
  require_finite(payload_);
}

FunctionRep FunctionRep::sine_series(Interval d, std::vector<double> c, BasisConvention conv) {
  return FunctionRep(RepKind::SineSeries, d, std::move(c), conv, 1.0);
}

FunctionRep FunctionRep::cosine_series(Interval d, std::vector<double> c, BasisConvention conv) {
  return FunctionRep(RepKind::CosineSeries, d, std::move(c), conv, 1.0);
}

FunctionRep FunctionRep::legendre_series(Interval d, std::vector<double> c) {
  return FunctionRep(RepKind::LegendreSeries, d, std::move(c), BasisConvention::Mapped, 1.0);
}

FunctionRep FunctionRep::laguerre_series(double s_max, double scale, std::vector<double> c) {
  if (!(scale > 0)) throw InvalidArgument("laguerre scale must be positive");
  return FunctionRep(RepKind::LaguerreSeries, Interval(0.0, s_max), std::move(c),
                     BasisConvention::Mapped, scale);
}

FunctionRep FunctionRep::grid_samples(Interval d, std::vector<double> samples) {
  return FunctionRep(RepKind::GridSamples, d, std::move(samples), BasisConvention::Mapped, 1.0);
}

std::vector<double> FunctionRep::chebyshev_points(Interval d, int points) {
  if (points < 1) throw InvalidArgument("need at least one sample point");
  std::vector<double> t(points);
  if (points == 1) {
    t[0] = d.midpoint();
    return t;
  }
  for (int j = 0; j < points; ++j) {
    double x = -std::cos(M_PI * j / (points - 1));
    if (j == 0) x = -1;
    if (j == points - 1) x = 1;
    if (2 * j == points - 1) x = 0;
    t[j] = d.midpoint() + 0.5 * d.length() * x;
  }
  return t;
}

FunctionRep FunctionRep::from_callable(Interval d, int points,
                                       const std::function<double(double)>& f) {
  auto t = chebyshev_points(d, points);
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = f(t[i]);
  return grid_samples(d, std::move(v));
}

FunctionRep FunctionRep::derivative() const {
  const std::size_t n = payload_.size();
  const double len = domain_.length();
  const bool raw = convention_ == BasisConvention::Raw;
  const double freq = raw ? M_PI : M_PI / len;
  switch (kind_) {
    case RepKind::SineSeries: {
      std::vector<double> c(n + 1, 0.0);
      for (std::size_t i = 0; i < n; ++i) c[i + 1] = payload_[i] * double(i + 1) * freq;
      return FunctionRep(RepKind::CosineSeries, domain_, std::move(c), convention_, 1.0);
    }
    case RepKind::CosineSeries: {
      std::vector<double> c(n > 1 ? n - 1 : 1, 0.0);
      for (std::size_t i = 1; i < n; ++i) c[i - 1] = -payload_[i] * double(i) * freq;
      return FunctionRep(RepKind::SineSeries, domain_, std::move(c), convention_, 1.0);
    }
    case RepKind::LegendreSeries: {
      // d_j = (2/L) sqrt(2j+1) sum_{k>j, k-j odd} sqrt(2k+1) c_k
      std::vector<double> d(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t k = j + 1; k < n; k += 2) s += std::sqrt(2.0 * k + 1) * payload_[k];
        d[j] = 2.0 / len * std::sqrt(2.0 * j + 1) * s;
      }
      return FunctionRep(RepKind::LegendreSeries, domain_, std::move(d), convention_, 1.0);
    }
    case RepKind::LaguerreSeries: {
      // ell_k' = 2s (-ell_k/2 - sum_{j<k} ell_j)
      std::vector<double> d(n, 0.0);
      double tail = 0;
      for (std::size_t j = n; j-- > 0;) {
        d[j] = 2 * scale_ * (-0.5 * payload_[j] - tail);
        tail += payload_[j];
      }
      return FunctionRep(RepKind::LaguerreSeries, domain_, std::move(d), convention_, scale_);
    }
    case RepKind::GridSamples: {
      if (n == 1) return FunctionRep(RepKind::GridSamples, domain_, {0.0}, convention_, 1.0);
      std::vector<double> x(n), w(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = -std::cos(M_PI * double(j) / double(n - 1));
        w[j] = (j % 2 == 0 ? 1.0 : -1.0) * ((j == 0 || j == n - 1) ? 0.5 : 1.0);
      }
      x[0] = -1;
      x[n - 1] = 1;
      if (n % 2 == 1) x[n / 2] = 0;
      std::vector<double> d(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        double diag = 0, s = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const double dij = (w[j] / w[i]) / (x[i] - x[j]);
          diag -= dij;
          s += dij * payload_[j];
        }
        d[i] = (s + diag * payload_[i]) * 2.0 / len;
      }
      return FunctionRep(RepKind::GridSamples, domain_, std::move(d), convention_, 1.0);
    }
  }
  throw UnsupportedKind("derivative: unknown representation");
}

FunctionRep FunctionRep::scaled(double factor) const {
  std::vector<double> c = payload_;
  for (double& x : c) x *= factor;
  return FunctionRep(kind_, domain_, std::move(c), convention_, scale_);
}

FunctionRep FunctionRep::plus(const FunctionRep& other) const {
  if (other.kind_ != kind_ || !(other.domain_ == domain_) || other.convention_ != convention_ ||
      other.scale_ != scale_)
    throw InvalidArgument("plus: representations differ");
  if (kind_ == RepKind::GridSamples && other.payload_.size() != payload_.size())
    throw InvalidArgument("plus: sample counts differ");
  std::vector<double> c(std::max(payload_.size(), other.payload_.size()), 0.0);
  for (std::size_t i = 0; i < payload_.size(); ++i) c[i] += payload_[i];
  for (std::size_t i = 0; i < other.payload_.size(); ++i) c[i] += other.payload_[i];
  return FunctionRep(kind_, domain_, std::move(c), convention_, scale_);
}

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::GridSamples: return "GridSamples";
    case RepKind::SineSeries: return "SineSeries";
    case RepKind::CosineSeries: return "CosineSeries";
    case RepKind::LegendreSeries: return "LegendreSeries";
    case RepKind::LaguerreSeries: return "LaguerreSeries";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& s) {
  for (RepKind k : {RepKind::GridSamples, RepKind::SineSeries, RepKind::CosineSeries,
                    RepKind::LegendreSeries, RepKind::LaguerreSeries})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown function kind: " + s);
}

nlohmann::ordered_json FunctionRep::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind_);
  j["domain"] = {{"a", domain_.a}, {"b", domain_.b}};
  j[kind_ == RepKind::GridSamples ? "samples" : "coefficients"] = payload_;
  if (convention_ == BasisConvention::Raw) j["basis"] = "raw";
  if (kind_ == RepKind::LaguerreSeries) j["scale"] = scale_;
  return j;
}

FunctionRep FunctionRep::from_json(const nlohmann::json& j) {
  try {
    const RepKind kind = parse_rep_kind(j.at("kind").get<std::string>());
    const Interval d(j.at("domain").at("a").get<double>(), j.at("domain").at("b").get<double>());
    auto payload = j.at(kind == RepKind::GridSamples ? "samples" : "coefficients")
                       .get<std::vector<double>>();
    const auto conv = j.value("basis", std::string("mapped")) == "raw" ? BasisConvention::Raw
                                                                      : BasisConvention::Mapped;
    if (kind == RepKind::LaguerreSeries) {
      if (d.a != 0.0) throw InvalidArgument("laguerre series must start at 0");
      return laguerre_series(d.b, j.at("scale").get<double>(), std::move(payload));
    }
    return FunctionRep(kind, d, std::move(payload), conv, 1.0);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed function json: ") + e.what());
  }
}

}  // namespace illposed
