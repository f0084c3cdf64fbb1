#include "illposed/diff_ops.hpp"

#include <cmath>

#include "illposed/errors.hpp"
#include "illposed/quadrature.hpp"

namespace illposed {

namespace {

constexpr int kHalfLineAssemblyNodes = 512;

// Orthonormal Legendre functions on [p,q] and their derivatives, rows = degree.
Eigen::MatrixXd legendre_rows(int N, const Interval& iv, std::span<const double> x, int d) {
  const double len = iv.length();
  Eigen::MatrixXd out(N, x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    const double t = (2 * x[c] - iv.a - iv.b) / len;
    double p0 = 1, p1 = t, d0 = 0, d1 = 1, s0 = 0, s1 = 0;
    for (int k = 0; k < N; ++k) {
      double p, dp, sp;
      if (k == 0) {
        p = 1, dp = 0, sp = 0;
      } else {
        p = p1, dp = d1, sp = s1;
      }
      const double norm = std::sqrt((2.0 * k + 1) / len);
      const double v = d == 0 ? p : d == 1 ? dp * (2 / len) : sp * (4 / (len * len));
      out(k, c) = norm * v;
      if (k >= 1) {
        // P_{k+1}, P'_{k+1} = P'_{k-1} + (2k+1) P_k, P''_{k+1} = P''_{k-1} + (2k+1) P'_k
        const double pn = ((2.0 * k + 1) * t * p1 - k * p0) / (k + 1);
        const double dn = d0 + (2.0 * k + 1) * p1;
        const double sn = s0 + (2.0 * k + 1) * d1;
        p0 = p1, p1 = pn;
        d0 = d1, d1 = dn;
        s0 = s1, s1 = sn;
      }
    }
  }
  return out;
}

// Raw Laguerre functions sqrt(2s) L_k(2 s t) e^{-s t} and derivatives.
Eigen::MatrixXd laguerre_rows(int N, double sigma, std::span<const double> t, int d) {
  Eigen::MatrixXd out(N, t.size());
  std::vector<double> L(N), dL(N), d2L(N);
  for (std::size_t c = 0; c < t.size(); ++c) {
    const double x = 2 * sigma * t[c];
    L[0] = 1;
    if (N > 1) L[1] = 1 - x;
    for (int k = 1; k + 1 < N; ++k) L[k + 1] = ((2 * k + 1 - x) * L[k] - k * L[k - 1]) / (k + 1);
    double sumL = 0, sumdL = 0;
    for (int k = 0; k < N; ++k) {
      dL[k] = -sumL;
      d2L[k] = -sumdL;
      sumL += L[k];
      sumdL += dL[k];
    }
    const double e = std::sqrt(2 * sigma) * std::exp(-x / 2), g = 2 * sigma;
    for (int k = 0; k < N; ++k) {
      double v = L[k];
      if (d == 1) v = g * (dL[k] - L[k] / 2);
      if (d == 2) v = g * g * (d2L[k] - dL[k] + L[k] / 4);
      out(k, c) = e * v;
    }
  }
  return out;
}

Nodes<double> assembly_nodes(const TrialBasis& basis) {
  if (basis.family == BasisFamily::Laguerre)
    return quadrature_nodes<double>(basis.domain, kHalfLineAssemblyNodes);
  return quadrature_nodes<double>(basis.domain, basis.size + 8);
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right,
                              const Eigen::VectorXd& weight) {
  Eigen::MatrixXd g = left * weight.asDiagonal() * right.transpose();
  return g;
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& s) { return 0.5 * (s + s.transpose()); }

void check_size(int N) {
  if (N < 4) throw InvalidArgument("Galerkin size must be at least 4");
}

GalerkinOperator fourth_order_unchecked(const Interval& ab, const HalfLineDomain& half, int N,
                                        SignVariant variant) {
  if (!(ab.a > 0)) throw InvalidArgument("fourth-order operator needs a > 0");
  check_size(N);
  TrialBasis basis;
  basis.family = BasisFamily::Laguerre;
  basis.size = N;
  basis.domain = half;
  basis.scale = ab.midpoint();
  auto nodes = quadrature_nodes<double>(half, kHalfLineAssemblyNodes);
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(nodes.w.data(), nodes.w.size());
  Eigen::MatrixXd raw = laguerre_rows(N, basis.scale, nodes.x, 0);
  Eigen::MatrixXd mass = weighted_gram(raw, raw, w);
  Eigen::LLT<Eigen::MatrixXd> llt(symmetrized(mass));
  if (llt.info() != Eigen::Success) throw RepresentationError("half-line trial basis is singular");
  basis.transform = llt.matrixL().solve(Eigen::MatrixXd::Identity(N, N));

  Eigen::MatrixXd f0 = basis.values(nodes.x, 0), f1 = basis.values(nodes.x, 1),
                  f2 = basis.values(nodes.x, 2);
  const double a2 = ab.a * ab.a, b2 = ab.b * ab.b;
  Eigen::VectorXd t2(w.size()), pot(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double t = nodes.x[i];
    t2[i] = w[i] * t * t;
    pot[i] = w[i] * ((variant == SignVariant::AsLemma ? -1.0 : 1.0) * a2 * b2 * t * t + 2 * a2);
  }
  const double sign = variant == SignVariant::AsLemma ? -1.0 : 1.0;
  Eigen::MatrixXd s = sign * (f2 * t2.asDiagonal() * f2.transpose()) +
                      sign * (a2 + b2) * (f1 * t2.asDiagonal() * f1.transpose()) +
                      f0 * pot.asDiagonal() * f0.transpose();
  return GalerkinOperator{symmetrized(s), std::move(basis),
                          FourthOrderHalfLine{ab, half, variant}};
}

Eigen::VectorXd eigenvalues_of(const GalerkinOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.stiffness, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

Eigen::MatrixXd TrialBasis::values(std::span<const double> x, int derivative) const {
  if (derivative < 0 || derivative > 2) throw InvalidArgument("derivative order must be 0..2");
  if (family == BasisFamily::Legendre) return legendre_rows(size, support(), x, derivative);
  return transform * laguerre_rows(size, scale, x, derivative);
}

FunctionRep TrialBasis::to_function(const Eigen::VectorXd& c) const {
  if (c.size() != size) throw InvalidArgument("coefficient vector has the wrong length");
  if (family == BasisFamily::Legendre)
    return FunctionRep::legendre_series(support(), std::vector<double>(c.data(), c.data() + c.size()));
  Eigen::VectorXd raw = transform.transpose() * c;
  return FunctionRep::laguerre_series(support().b, scale,
                                      std::vector<double>(raw.data(), raw.data() + raw.size()));
}

TrialBasis TrialBasis::on_interval(const Interval& target) const {
  if (family != BasisFamily::Legendre) throw UnsupportedKind("only Legendre bases can be remapped");
  TrialBasis b = *this;
  b.domain = target;
  return b;
}

DiffOpSpec parse_diff_op(std::string_view name, double a, double b) {
  if (name == "bg") return BerteroGrunbaum{Interval(a, b)};
  if (name == "prolate") return Prolate{};
  if (name == "fourth:lemma" || name == "fourth:proof")
    return FourthOrderHalfLine{Interval(a, b), HalfLineDomain::for_laplace(a),
                               name == "fourth:lemma" ? SignVariant::AsLemma
                                                      : SignVariant::AsProofBound};
  throw InvalidArgument("unknown differential operator '" + std::string(name) + "'");
}

std::string to_string(const DiffOpSpec& spec) {
  struct V {
    std::string operator()(const BerteroGrunbaum&) const { return "bg"; }
    std::string operator()(const Prolate&) const { return "prolate"; }
    std::string operator()(const FourthOrderHalfLine& f) const {
      return f.sign_variant == SignVariant::AsLemma ? "fourth:lemma" : "fourth:proof";
    }
  };
  return std::visit(V{}, spec);
}

GalerkinOperator assemble_bertero_grunbaum(const Interval& ab, int N) {
  if (!(ab.a > 0)) throw InvalidArgument("Bertero-Grunbaum operator needs a > 0");
  check_size(N);
  TrialBasis basis;
  basis.size = N;
  basis.domain = ab;
  auto nodes = assembly_nodes(basis);
  Eigen::MatrixXd f0 = basis.values(nodes.x, 0), f1 = basis.values(nodes.x, 1);
  Eigen::VectorXd p(nodes.x.size()), q(nodes.x.size());
  const double a2 = ab.a * ab.a, b2 = ab.b * ab.b;
  for (std::size_t i = 0; i < nodes.x.size(); ++i) {
    const double t2 = nodes.x[i] * nodes.x[i];
    p[i] = nodes.w[i] * (t2 - a2) * (b2 - t2);
    q[i] = nodes.w[i] * 2 * (t2 - a2);
  }
  Eigen::MatrixXd s = f1 * p.asDiagonal() * f1.transpose() + f0 * q.asDiagonal() * f0.transpose();
  return GalerkinOperator{symmetrized(s), std::move(basis), BerteroGrunbaum{ab}};
}

GalerkinOperator assemble_prolate(int N) {
  check_size(N);
  TrialBasis basis;
  basis.size = N;
  basis.domain = Interval(-1.0, 1.0);
  auto nodes = assembly_nodes(basis);
  Eigen::MatrixXd f0 = basis.values(nodes.x, 0), f1 = basis.values(nodes.x, 1);
  Eigen::VectorXd p(nodes.x.size()), q(nodes.x.size());
  for (std::size_t i = 0; i < nodes.x.size(); ++i) {
    const double x2 = nodes.x[i] * nodes.x[i];
    p[i] = nodes.w[i] * (1 - x2);
    q[i] = nodes.w[i] * x2;
  }
  Eigen::MatrixXd s = f1 * p.asDiagonal() * f1.transpose() + f0 * q.asDiagonal() * f0.transpose();
  return GalerkinOperator{symmetrized(s), std::move(basis), Prolate{}};
}

GalerkinOperator assemble_fourth_order(const Interval& ab, const HalfLineDomain& half, int N,
                                       SignVariant variant) {
  if (N > kMaxHalfLineTrial)
    throw InvalidArgument("half-line trial size above " + std::to_string(kMaxHalfLineTrial));
  return fourth_order_unchecked(ab, half, N, variant);
}

GalerkinOperator assemble(const DiffOpSpec& spec, int N) {
  struct V {
    int N;
    GalerkinOperator operator()(const BerteroGrunbaum& s) const {
      return assemble_bertero_grunbaum(s.ab, N);
    }
    GalerkinOperator operator()(const Prolate&) const { return assemble_prolate(N); }
    GalerkinOperator operator()(const FourthOrderHalfLine& s) const {
      return assemble_fourth_order(s.ab, s.half, N, s.sign_variant);
    }
  };
  return std::visit(V{N}, spec);
}

Eigen::VectorXd project(const TrialBasis& basis, const FunctionRep& f, double tol) {
  const Interval box = basis.support();
  if (!(f.domain() == box))
    throw InvalidArgument("function domain " + describe(f.domain()) + " differs from trial space " +
                          describe(box));
  if (f.empty()) throw InvalidArgument("function has an empty payload");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(basis.size);
  if (basis.family == BasisFamily::Legendre && f.kind() == RepKind::LegendreSeries) {
    const auto& p = f.payload();
    double kept = 0, dropped = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (int(k) < basis.size) {
        c[k] = p[k];
        kept += p[k] * p[k];
      } else {
        dropped += p[k] * p[k];
      }
    }
    if (dropped > tol * tol * (kept + dropped))
      throw RepresentationError("function not representable in the trial space");
    return c;
  }
  Nodes<double> nodes = basis.family == BasisFamily::Laguerre
                            ? quadrature_nodes<double>(basis.domain, kHalfLineAssemblyNodes)
                            : quadrature_nodes<double>(basis.domain,
                                                       std::max<int>(2 * basis.size + 16,
                                                                     2 * int(f.payload().size()) + 16));
  Eigen::MatrixXd phi = basis.values(nodes.x, 0);
  Eigen::VectorXd fv(nodes.x.size()), w(nodes.x.size());
  for (std::size_t i = 0; i < nodes.x.size(); ++i) {
    fv[i] = f(nodes.x[i]);
    w[i] = nodes.w[i];
  }
  c = phi * w.asDiagonal() * fv;
  Eigen::VectorXd r = fv - phi.transpose() * c;
  const double rr = r.cwiseProduct(r).dot(w), ff = fv.cwiseProduct(fv).dot(w);
  if (ff == 0.0) return Eigen::VectorXd::Zero(basis.size);
  if (rr > tol * tol * ff) throw RepresentationError("function not representable in the trial space");
  return c;
}

double dirichlet_form(const GalerkinOperator& op, const FunctionRep& f) {
  const Eigen::VectorXd c = project(op.basis, f);
  return c.dot(op.stiffness * c);
}

int converged_mode_count(const DiffOpSpec& spec, int N) {
  Eigen::VectorXd coarse, fine;
  if (const auto* f = std::get_if<FourthOrderHalfLine>(&spec)) {
    coarse = eigenvalues_of(fourth_order_unchecked(f->ab, f->half, N, f->sign_variant));
    fine = eigenvalues_of(fourth_order_unchecked(f->ab, f->half, N + 8, f->sign_variant));
  } else {
    struct V {
      int N;
      GalerkinOperator operator()(const BerteroGrunbaum& s) const {
        return assemble_bertero_grunbaum(s.ab, N);
      }
      GalerkinOperator operator()(const Prolate&) const { return assemble_prolate(N); }
      GalerkinOperator operator()(const FourthOrderHalfLine&) const { throw UnsupportedKind(""); }
    };
    coarse = eigenvalues_of(std::visit(V{N}, spec));
    fine = eigenvalues_of(std::visit(V{2 * N}, spec));
  }
  int count = 0;
  while (count < N / 4 && count < coarse.size()) {
    // the AsLemma variant is negative definite; its order runs the other way
    const bool negative = coarse[coarse.size() - 1] < 0;
    const double x = negative ? coarse[coarse.size() - 1 - count] : coarse[count];
    const double y = negative ? fine[fine.size() - 1 - count] : fine[count];
    if (std::fabs(x - y) > 1e-8 * std::fabs(y)) break;
    ++count;
  }
  return count;
}

Eigen::MatrixXd derivative_gram(const TrialBasis& basis) {
  auto nodes = assembly_nodes(basis);
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(nodes.w.data(), nodes.w.size());
  Eigen::MatrixXd d = basis.values(nodes.x, 1);
  return weighted_gram(d, d, w);
}

Eigen::MatrixXd moment_derivative_gram(const TrialBasis& basis) {
  auto nodes = assembly_nodes(basis);
  Eigen::VectorXd xw(nodes.w.size());
  for (std::size_t i = 0; i < nodes.w.size(); ++i) xw[i] = nodes.w[i] * nodes.x[i];
  return weighted_gram(basis.values(nodes.x, 1), basis.values(nodes.x, 0), xw);
}

Eigen::MatrixXd moment_gram(const TrialBasis& basis) {
  auto nodes = assembly_nodes(basis);
  Eigen::VectorXd xw(nodes.w.size());
  for (std::size_t i = 0; i < nodes.w.size(); ++i) xw[i] = nodes.w[i] * nodes.x[i];
  Eigen::MatrixXd v = basis.values(nodes.x, 0);
  return weighted_gram(v, v, xw);
}

Eigen::MatrixXd first_derivative_pairing(const TrialBasis& basis) {
  auto nodes = assembly_nodes(basis);
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(nodes.w.data(), nodes.w.size());
  return weighted_gram(basis.values(nodes.x, 1), basis.values(nodes.x, 0), w);
}

}  // namespace illposed
