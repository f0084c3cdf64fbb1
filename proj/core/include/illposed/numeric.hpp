#pragma once

#include <cfloat>
#include <cmath>

#include <quadmath.h>

// Overloads so the same template code runs in double and in binary128.
namespace illposed::num {

using quad = __float128;

inline double sqrt(double x) { return std::sqrt(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double abs(double x) { return std::fabs(x); }

inline quad sqrt(quad x) { return sqrtq(x); }
inline quad sin(quad x) { return sinq(x); }
inline quad cos(quad x) { return cosq(x); }
inline quad exp(quad x) { return expq(x); }
inline quad log(quad x) { return logq(x); }
inline quad abs(quad x) { return fabsq(x); }

template <class Real> Real pi();
template <> inline double pi<double>() { return M_PI; }
template <> inline quad pi<quad>() { return M_PIq; }

template <class Real> Real epsilon();
template <> inline double epsilon<double>() { return DBL_EPSILON; }
template <> inline quad epsilon<quad>() { return FLT128_EPSILON; }

// Neumaier summation
template <class Real>
class CompensatedSum {
 public:
  void add(Real x) {
    Real t = sum_ + x;
    if (abs(sum_) >= abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_ = 0;
  Real carry_ = 0;
};

}  // namespace illposed::num
