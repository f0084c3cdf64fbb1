#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "illposed/numeric.hpp"

namespace illposed {

// Column-major dense matrix for scalar types Eigen cannot host.
template <class Real>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Real> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, Real(0)) {}
  Real& operator()(int i, int j) { return data[std::size_t(j) * rows + i]; }
  const Real& operator()(int i, int j) const { return data[std::size_t(j) * rows + i]; }
  Real* column(int j) { return data.data() + std::size_t(j) * rows; }
  const Real* column(int j) const { return data.data() + std::size_t(j) * rows; }
};

template <class Real>
DenseMatrix<Real> multiply(const DenseMatrix<Real>& a, const DenseMatrix<Real>& b) {
  DenseMatrix<Real> c(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j)
    for (int k = 0; k < a.cols; ++k) {
      const Real bkj = b(k, j);
      if (bkj == Real(0)) continue;
      const Real* ak = a.column(k);
      Real* cj = c.column(j);
      for (int i = 0; i < a.rows; ++i) cj[i] += ak[i] * bkj;
    }
  return c;
}

template <class Real>
struct SvdResult {
  std::vector<Real> sigma;  // descending
  DenseMatrix<Real> v;      // right singular vectors in columns, same order
};

// One-sided (Hestenes) Jacobi SVD. Works column-wise on a copy of a.
template <class Real>
SvdResult<Real> jacobi_svd(DenseMatrix<Real> a, int max_sweeps = 60) {
  const int m = a.rows, n = a.cols;
  DenseMatrix<Real> v(n, n);
  for (int i = 0; i < n; ++i) v(i, i) = 1;
  const Real tol = num::epsilon<Real>();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        Real alpha = 0, beta = 0, gamma = 0;
        Real* ap = a.column(p);
        Real* aq = a.column(q);
        for (int i = 0; i < m; ++i) {
          alpha += ap[i] * ap[i];
          beta += aq[i] * aq[i];
          gamma += ap[i] * aq[i];
        }
        if (gamma == Real(0) || num::abs(gamma) <= tol * num::sqrt(alpha * beta)) continue;
        rotated = true;
        const Real zeta = (beta - alpha) / (2 * gamma);
        const Real t = (zeta >= 0 ? Real(1) : Real(-1)) /
                       (num::abs(zeta) + num::sqrt(1 + zeta * zeta));
        const Real c = 1 / num::sqrt(1 + t * t), s = c * t;
        for (int i = 0; i < m; ++i) {
          const Real x = ap[i], y = aq[i];
          ap[i] = c * x - s * y;
          aq[i] = s * x + c * y;
        }
        Real* vp = v.column(p);
        Real* vq = v.column(q);
        for (int i = 0; i < n; ++i) {
          const Real x = vp[i], y = vq[i];
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
      }
    if (!rotated) break;
  }
  std::vector<Real> norms(n);
  for (int j = 0; j < n; ++j) {
    Real s = 0;
    for (int i = 0; i < m; ++i) s += a(i, j) * a(i, j);
    norms[j] = num::sqrt(s);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return norms[x] > norms[y]; });
  SvdResult<Real> r;
  r.v = DenseMatrix<Real>(n, n);
  for (int j = 0; j < n; ++j) {
    r.sigma.push_back(norms[order[j]]);
    for (int i = 0; i < n; ++i) r.v(i, j) = v(i, order[j]);
  }
  return r;
}

}  // namespace illposed
