// Copyright 2026 The fracsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
// ANY KIND, EITHER EXPRESS OR IMPLIED. See the License for the specific
// language governing permissions and limitations under the License.

#include "fracsolve/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsolve {

DenseMatrix dense_toeplitz(const SymToeplitz& t) {
  const std::size_t m = t.dim();
  DenseMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = t.col[i > j ? i - j : j - i];
  }
  return out;
}

DenseMatrix dense_operator(const FracOperator1D& op) {
  const std::size_t m = op.dim();
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff() * op.cbar_value();
  const auto& c = op.G().col;
  DenseMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = (i == j ? idc : 0.0) - dfc * c[i > j ? i - j : j - i];
    }
  }
  return out;
}

DenseMatrix dense_operator(const FracOperator2D& op) {
  const std::size_t m1 = op.dim1(), m2 = op.dim2(), n = op.dim();
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff();
  const auto& c1 = op.G1().col;
  const auto& c2 = op.G2().col;
  DenseMatrix out(n, n);
  for (std::size_t i1 = 0; i1 < m1; ++i1) {
    for (std::size_t i2 = 0; i2 < m2; ++i2) {
      const std::size_t row = i1 * m2 + i2;
      for (std::size_t j1 = 0; j1 < m1; ++j1) {
        for (std::size_t j2 = 0; j2 < m2; ++j2) {
          const std::size_t col = j1 * m2 + j2;
          double v = (row == col) ? idc : 0.0;
          if (i2 == j2) v -= dfc * op.cbar1() * c1[i1 > j1 ? i1 - j1 : j1 - i1];
          if (i1 == j1) v -= dfc * op.cbar2() * c2[i2 > j2 ? i2 - j2 : j2 - i2];
          out(row, col) = v;
        }
      }
    }
  }
  return out;
}

DenseMatrix dense_precond(const FracOperator1D& op) {
  const std::size_t m = op.dim();
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff() * op.cbar_value();
  const DenseMatrix tau = tau_dense(op.G());
  DenseMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = (i == j ? idc : 0.0) - dfc * tau(i, j);
  }
  return out;
}

DenseMatrix dense_precond(const FracOperator2D& op) {
  const std::size_t m1 = op.dim1(), m2 = op.dim2(), n = op.dim();
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff();
  const DenseMatrix tau1 = tau_dense(op.G1());
  const DenseMatrix tau2 = tau_dense(op.G2());
  DenseMatrix out(n, n);
  for (std::size_t i1 = 0; i1 < m1; ++i1) {
    for (std::size_t i2 = 0; i2 < m2; ++i2) {
      const std::size_t row = i1 * m2 + i2;
      for (std::size_t j1 = 0; j1 < m1; ++j1) {
        for (std::size_t j2 = 0; j2 < m2; ++j2) {
          const std::size_t col = j1 * m2 + j2;
          double v = (row == col) ? idc : 0.0;
          if (i2 == j2) v -= dfc * op.cbar1() * tau1(i1, j1);
          if (i1 == j1) v -= dfc * op.cbar2() * tau2(i2, j2);
          out(row, col) = v;
        }
      }
    }
  }
  return out;
}

namespace {

// B = P^{-1/2} A P^{-1/2} through fast tau applies on rows/columns of the
// dense A. Applying the symmetric transform to all columns and then all rows
// keeps everything in symmetric territory for the Jacobi oracle.
template <class Precond>
std::vector<double> sandwich_spectrum(DenseMatrix a, const Precond& p) {
  const std::size_t n = a.rows();
  PrecondWorkspace ws = p.make_workspace();
  std::vector<double> col(n), out(n);
  // Columns: B1 = P^{-1/2} A
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = a(i, j);
    p.apply_inv_sqrt(col, std::span<double>(out), ws);
    for (std::size_t i = 0; i < n; ++i) a(i, j) = out[i];
  }
  // Rows: B = B1 P^{-1/2}
  for (std::size_t i = 0; i < n; ++i) {
    p.apply_inv_sqrt(a.row(i), std::span<double>(col), ws);
    std::copy(col.begin(), col.end(), a.row(i).begin());
  }
  // Symmetrize away roundoff before the oracle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return sym_eigs(a);
}

}  // namespace

std::vector<double> precond_spectrum(const FracOperator1D& op, const TauPrecond1D& p) {
  if (op.dim() > 512) throw std::invalid_argument("precond_spectrum: M above the 512 oracle limit");
  if (op.dim() != p.dim()) throw std::invalid_argument("precond_spectrum: operator/preconditioner mismatch");
  return sandwich_spectrum(dense_operator(op), p);
}

std::vector<double> precond_spectrum(const FracOperator2D& op, const TauPrecond2D& p) {
  if (op.dim1() > 32 || op.dim2() > 32) {
    throw std::invalid_argument("precond_spectrum: M_i above the 32 oracle limit");
  }
  if (op.dim() != p.dim()) throw std::invalid_argument("precond_spectrum: operator/preconditioner mismatch");
  return sandwich_spectrum(dense_operator(op), p);
}

ClusterReport cluster_report(std::span<const double> eigs, double center, std::vector<double> radii) {
  if (eigs.empty()) throw std::invalid_argument("cluster_report: empty spectrum");
  std::sort(radii.begin(), radii.end());
  ClusterReport rep;
  rep.center = center;
  rep.radii = radii;
  for (double r : radii) {
    std::size_t inside = 0;
    for (double e : eigs) {
      if (std::abs(e - center) <= r) ++inside;
    }
    rep.fractions.push_back(static_cast<double>(inside) / static_cast<double>(eigs.size()));
    rep.outlier_count_at[r] = eigs.size() - inside;
  }
  return rep;
}

}  // namespace fracsolve
