#include "illposed/integral_ops.hpp"

#include <cmath>
#include <cstdio>

#include "illposed/errors.hpp"
#include "illposed/norms.hpp"

namespace illposed {

namespace detail {

Domain output_domain(const OperatorKind& kind) {
  struct V {
    Domain operator()(const HilbertTruncated& h) const { return h.J; }
    Domain operator()(const LaplaceTT& l) const { return HalfLineDomain::for_laplace(l.ab.a); }
    Domain operator()(const LaplaceAdjointTT& l) const { return l.ab; }
    Domain operator()(const FourierTT& f) const { return f.sym; }
  };
  return std::visit(V{}, kind);
}

int output_size(const OperatorKind& kind, int n) {
  if (std::holds_alternative<HilbertTruncated>(kind)) return 2 * n;
  if (std::holds_alternative<LaplaceTT>(kind)) return std::max(2 * n, 16);
  return std::max(n, 16);
}

}  // namespace detail

namespace {

double adjoint_kernel(double a, double b, double u) {
  if (u < 1e-3) {
    // (e^{-au} - e^{-bu})/u = sum_k (-1)^k (b^{k+1} - a^{k+1}) u^k / (k+1)!
    double sum = 0, ak = a, bk = b, uk = 1, fact = 1;
    for (int k = 0; k < 8; ++k) {
      fact *= (k + 1);
      sum += ((k % 2 == 0) ? 1.0 : -1.0) * (bk - ak) * uk / fact;
      ak *= a;
      bk *= b;
      uk *= u;
    }
    return sum;
  }
  return (std::exp(-a * u) - std::exp(-b * u)) / u;
}

void require_grid(const OperatorKind& kind, const QuadGrid& grid) {
  if (!(grid.domain() == input_domain(kind)))
    throw InvalidArgument("grid domain " + describe(grid.domain()) + " does not match " +
                          to_string(kind));
  if (int(grid.size()) > kMaxGridSize) throw InvalidArgument("grid larger than 1024 nodes");
}

// ||T f||^2 through the transform factor with compensated sums.
// f holds sqrt(w_i) f(x_i); the factor carries the remaining sqrt(w_i).
double transform_energy(const OperatorKind& kind, const QuadGrid& grid, const std::vector<double>& f) {
  Nodes<double> in{grid.nodes(), grid.weights()};
  const auto a = transform_factor<double>(kind, in);
  num::CompensatedSum<double> total;
  for (int k = 0; k < a.rows; ++k) {
    num::CompensatedSum<double> s;
    for (int i = 0; i < a.cols; ++i) s.add(a(k, i) * f[i]);
    const double v = s.value();
    total.add(v * v);
  }
  return total.value();
}

}  // namespace

std::vector<double> laplace_forward(const FunctionRep& f, const Interval& ab,
                                    std::span<const double> s_values, int n) {
  if (!(f.domain() == ab)) throw InvalidArgument("laplace_forward: function not on [a,b]");
  for (double s : s_values)
    if (!(s >= 0)) throw InvalidArgument("laplace_forward: s must be nonnegative");
  const QuadGrid grid = make_grid(ab, n);
  const auto v = sample(f, grid);
  std::vector<double> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    num::CompensatedSum<double> acc;
    for (std::size_t i = 0; i < v.size(); ++i)
      acc.add(grid.weights()[i] * std::exp(-s * grid.nodes()[i]) * v[i]);
    out.push_back(acc.value());
  }
  return out;
}

double kernel_value(const OperatorKind& kind, double x, double y) {
  struct V {
    double x, y;
    double operator()(const HilbertTruncated&) const {
      throw UnsupportedKind("truncated Hilbert transform has no pointwise T*T kernel; use gram_matrix");
    }
    double operator()(const LaplaceTT&) const { return 1.0 / (x + y); }
    double operator()(const LaplaceAdjointTT& l) const { return adjoint_kernel(l.ab.a, l.ab.b, x + y); }
    double operator()(const FourierTT&) const {
      const double u = x - y;
      if (u == 0.0) return 2.0;
      if (std::fabs(u) < 1e-4) return 2.0 * (1.0 - u * u / 6.0 + u * u * u * u / 120.0);
      return 2.0 * std::sin(u) / u;
    }
  };
  return std::visit(V{x, y}, kind);
}

OperatorMatrix gram_matrix(const OperatorKind& kind, const QuadGrid& grid) {
  require_grid(kind, grid);
  const int n = int(grid.size());
  Eigen::MatrixXd m(n, n);
  if (std::holds_alternative<HilbertTruncated>(kind)) {
    Nodes<double> in{grid.nodes(), grid.weights()};
    const auto a = transform_factor<double>(kind, in);
    Eigen::Map<const Eigen::MatrixXd> am(a.data.data(), a.rows, a.cols);
    m = am.transpose() * am;
    m = 0.5 * (m + m.transpose()).eval();
  } else {
    const auto& x = grid.nodes();
    const auto& w = grid.weights();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = std::sqrt(w[i] * w[j]) * kernel_value(kind, x[i], x[j]);
        m(i, j) = v;
        m(j, i) = v;
      }
  }
  return OperatorMatrix{std::move(m), grid, kind, true};
}

double quadratic_form(const OperatorMatrix& m, const FunctionRep& f) {
  const auto v = sample(f, m.grid);
  Eigen::VectorXd ft(v.size());
  double norm2 = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ft[i] = std::sqrt(m.grid.weights()[i]) * v[i];
    norm2 += ft[i] * ft[i];
  }
  const double plain = ft.dot(m.entries * ft);
  // below this level the dense product keeps fewer than eight correct digits
  if (plain >= kCancellationThreshold * norm2) return plain;
  if (norm2 == 0.0) return 0.0;
  if (std::holds_alternative<FourierTT>(m.kind)) return fourier_energy(f, int(m.grid.size()));
  return transform_energy(m.kind, m.grid, std::vector<double>(ft.data(), ft.data() + ft.size()));
}

double fourier_energy(const FunctionRep& f, int n) {
  const Interval sym(-1.0, 1.0);
  if (!(f.domain() == sym)) throw InvalidArgument("fourier_energy: function must live on [-1,1]");
  const Nodes<double> xi = gauss_legendre<double>(n);
  const bool closed = f.convention() == BasisConvention::Raw &&
                      (f.kind() == RepKind::SineSeries || f.kind() == RepKind::CosineSeries);
  const QuadGrid grid = make_grid(sym, n);
  std::vector<double> fx;
  if (!closed) fx = sample(f, grid);
  num::CompensatedSum<double> total;
  for (int k = 0; k < n; ++k) {
    const double z = xi.x[k];
    num::CompensatedSum<double> re, im;
    if (closed) {
      const auto& c = f.payload();
      const bool sine = f.kind() == RepKind::SineSeries;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        const int j = sine ? int(i) + 1 : int(i);
        const double kp = j * M_PI, sign = (j % 2 == 0) ? 1.0 : -1.0;
        if (sine) {
          im.add(c[i] * sign * 2.0 * kp * std::sin(z) / (z * z - kp * kp));
        } else if (j == 0) {
          re.add(c[i] * (z == 0.0 ? 2.0 : 2.0 * std::sin(z) / z));
        } else {
          re.add(c[i] * sign * 2.0 * z * std::sin(z) / (z * z - kp * kp));
        }
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const double wf = grid.weights()[i] * fx[i], x = grid.nodes()[i];
        re.add(wf * std::cos(z * x));
        im.add(wf * std::sin(z * x));
      }
    }
    const double r = re.value(), s = im.value();
    total.add(xi.w[k] * (r * r + s * s));
  }
  return total.value();
}

void write_csv(std::ostream& os, const OperatorMatrix& m) {
  os << "# kind=" << to_string(m.kind) << " n=" << m.grid.size() << '\n';
  char buf[40];
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m.entries(i, j));
      os << (j ? "," : "") << buf;
    }
    os << '\n';
  }
}

}  // namespace illposed
