#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "illposed/domain.hpp"

namespace illposed {

struct HilbertTruncated {
  Interval I;
  Interval J;
};

struct LaplaceTT {
  Interval ab;
};

struct LaplaceAdjointTT {
  Interval ab;
  HalfLineDomain half;
};

struct FourierTT {
  Interval sym;
};

using OperatorKind = std::variant<HilbertTruncated, LaplaceTT, LaplaceAdjointTT, FourierTT>;

OperatorKind make_hilbert(Interval I, Interval J);
OperatorKind make_laplace(double a, double b);
OperatorKind make_laplace_adjoint(double a, double b);
OperatorKind make_laplace_adjoint(double a, double b, HalfLineDomain half);
OperatorKind make_fourier();

// "hilbert:I=0,1:J=2,3", "laplace:a=1,b=2", "laplace-adjoint:a=1,b=2", "fourier"
OperatorKind parse_operator_kind(std::string_view text);
std::string to_string(const OperatorKind& kind);
Domain input_domain(const OperatorKind& kind);

}  // namespace illposed
