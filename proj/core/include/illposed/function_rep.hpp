#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "illposed/domain.hpp"
#include "illposed/numeric.hpp"

namespace illposed {

enum class RepKind { GridSamples, SineSeries, CosineSeries, LegendreSeries, LaguerreSeries };

// Mapped: sin(k pi (x-p)/(q-p)) on [p,q]. Raw: sin(k pi x), as the figures print it.
enum class BasisConvention { Mapped, Raw };

std::string to_string(RepKind k);
RepKind parse_rep_kind(const std::string& s);

// Payload index conventions:
//   SineSeries      c[k-1] multiplies sin(k ...), k >= 1
//   CosineSeries    c[k]   multiplies cos(k ...), k >= 0
//   LegendreSeries  c[k]   multiplies sqrt((2k+1)/L) P_k(mapped x), orthonormal on the interval
//   LaguerreSeries  c[k]   multiplies sqrt(2s) L_k(2 s t) exp(-s t), s = scale, orthonormal on [0,inf)
//   GridSamples     values at the Chebyshev-Lobatto points of the interval, ascending
class FunctionRep {
 public:
  static FunctionRep sine_series(Interval d, std::vector<double> c,
                                 BasisConvention conv = BasisConvention::Mapped);
  static FunctionRep cosine_series(Interval d, std::vector<double> c,
                                   BasisConvention conv = BasisConvention::Mapped);
  static FunctionRep legendre_series(Interval d, std::vector<double> c);
  static FunctionRep laguerre_series(double s_max, double scale, std::vector<double> c);
  static FunctionRep grid_samples(Interval d, std::vector<double> samples);
  static FunctionRep from_callable(Interval d, int points, const std::function<double(double)>& f);

  static std::vector<double> chebyshev_points(Interval d, int points);

  RepKind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  const std::vector<double>& payload() const { return payload_; }
  BasisConvention convention() const { return convention_; }
  double scale() const { return scale_; }
  bool empty() const { return payload_.empty(); }

  double operator()(double x) const { return eval<double>(x); }
  template <class Real> Real eval(Real x) const;

  FunctionRep derivative() const;
  FunctionRep scaled(double factor) const;
  // Same-kind sum; payloads are zero-padded.
  FunctionRep plus(const FunctionRep& other) const;

  nlohmann::ordered_json to_json() const;
  static FunctionRep from_json(const nlohmann::json& j);

 private:
  FunctionRep(RepKind kind, Interval domain, std::vector<double> payload, BasisConvention conv,
              double scale);

  RepKind kind_;
  Interval domain_;
  std::vector<double> payload_;
  BasisConvention convention_ = BasisConvention::Mapped;
  double scale_ = 1.0;
};

template <class Real>
Real FunctionRep::eval(Real x) const {
  const Real p = domain_.a, q = domain_.b, len = q - p;
  const std::size_t n = payload_.size();
  switch (kind_) {
    case RepKind::SineSeries:
    case RepKind::CosineSeries: {
      const bool raw = convention_ == BasisConvention::Raw;
      const Real theta = raw ? num::pi<Real>() * x : num::pi<Real>() * (x - p) / len;
      const bool sine = kind_ == RepKind::SineSeries;
      num::CompensatedSum<Real> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (payload_[i] == 0.0) continue;
        const int k = sine ? int(i) + 1 : int(i);
        const Real arg = Real(k) * theta;
        s.add(Real(payload_[i]) * (sine ? num::sin(arg) : num::cos(arg)));
      }
      return s.value();
    }
    case RepKind::LegendreSeries: {
      const Real t = (2 * x - p - q) / len;
      Real p0 = 1, p1 = t, sum = Real(payload_.empty() ? 0.0 : payload_[0]) * num::sqrt(1 / len);
      for (std::size_t k = 1; k < n; ++k) {
        sum += Real(payload_[k]) * num::sqrt(Real(2 * k + 1) / len) * p1;
        Real p2 = (Real(2 * k + 1) * t * p1 - Real(k) * p0) / Real(k + 1);
        p0 = p1;
        p1 = p2;
      }
      return sum;
    }
    case RepKind::LaguerreSeries: {
      const Real s = scale_, u = 2 * s * x;
      Real l0 = 1, l1 = 1 - u, sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += Real(payload_[k]) * l0;
        Real l2 = (Real(2 * k + 3) - u) * l1 / Real(k + 2) - Real(k + 1) * l0 / Real(k + 2);
        l0 = l1;
        l1 = l2;
      }
      return num::sqrt(2 * s) * num::exp(-s * x) * sum;
    }
    case RepKind::GridSamples: {
      if (n == 1) return Real(payload_[0]);
      // barycentric formula of the second kind on Chebyshev-Lobatto points
      const Real t = (2 * x - p - q) / len;
      Real num_sum = 0, den_sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        Real xj = -num::cos(num::pi<Real>() * Real(j) / Real(n - 1));
        if (j == 0) xj = -1;
        if (j == n - 1) xj = 1;
        if (2 * j == n - 1) xj = 0;
        Real wj = (j % 2 == 0) ? 1 : -1;
        if (j == 0 || j == n - 1) wj /= 2;
        Real diff = t - xj;
        if (diff == 0) return Real(payload_[j]);
        Real c = wj / diff;
        num_sum += c * Real(payload_[j]);
        den_sum += c;
      }
      return num_sum / den_sum;
    }
  }
  return 0;
}

}  // namespace illposed
