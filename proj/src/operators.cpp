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

#include "fracsolve/operators.hpp"

#include <stdexcept>

namespace fracsolve {

namespace {

void transpose(std::span<const double> in, std::size_t rows, std::size_t cols, std::span<double> out) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
  }
}

}  // namespace

FracOperator1D::FracOperator1D(FracOrder alpha, SchemeId scheme, std::size_t m, double hx, double ht,
                               double eps, double s)
    : FracOperator1D(build_G(alpha, scheme, m), alpha, scheme, hx, ht, eps, s) {}

FracOperator1D::FracOperator1D(SymToeplitz g, FracOrder alpha, SchemeId scheme, double hx, double ht,
                               double eps, double s)
    : alpha_(alpha),
      scheme_(scheme),
      hx_(hx),
      ht_(ht),
      eps_(eps),
      s_(s),
      cbar_(cbar(alpha, hx)),
      matvec_(std::move(g)) {
  if (!(ht > 0.0)) throw std::invalid_argument("FracOperator1D: time step must be positive");
  if (eps < 0.0 || s < 0.0) throw std::invalid_argument("FracOperator1D: eps and s must be nonnegative");
}

OperatorWorkspace FracOperator1D::make_workspace() const {
  OperatorWorkspace ws;
  ws.t1.resize(dim());
  ws.tz1 = matvec_.make_workspace();
  return ws;
}

void FracOperator1D::apply_riesz(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const {
  matvec_.apply(v, out, ws.tz1);
  for (auto& x : out) x *= cbar_;
}

void FracOperator1D::apply(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const {
  const std::size_t m = dim();
  if (v.size() != m || out.size() != m) throw std::invalid_argument("FracOperator1D::apply: dimension mismatch");
  if (ws.t1.size() != m) ws.t1.resize(m);
  matvec_.apply(v, ws.t1, ws.tz1);
  const double idc = identity_coeff();
  const double dfc = diffusion_coeff() * cbar_;
  for (std::size_t i = 0; i < m; ++i) out[i] = idc * v[i] - dfc * ws.t1[i];
}

std::vector<double> FracOperator1D::apply(std::span<const double> v) const {
  std::vector<double> out(v.size());
  OperatorWorkspace ws = make_workspace();
  apply(v, out, ws);
  return out;
}

FracOperator2D::FracOperator2D(FracOrder alpha1, FracOrder alpha2, SchemeId scheme, std::size_t m1,
                               std::size_t m2, double hx1, double hx2, double ht, double eps, double s)
    : alpha1_(alpha1),
      alpha2_(alpha2),
      scheme_(scheme),
      m1_(m1),
      m2_(m2),
      hx1_(hx1),
      hx2_(hx2),
      ht_(ht),
      eps_(eps),
      s_(s),
      cbar1_(cbar(alpha1, hx1)),
      cbar2_(cbar(alpha2, hx2)),
      matvec1_(build_G(alpha1, scheme, m1)),
      matvec2_(build_G(alpha2, scheme, m2)) {
  if (!(ht > 0.0)) throw std::invalid_argument("FracOperator2D: time step must be positive");
  if (eps < 0.0 || s < 0.0) throw std::invalid_argument("FracOperator2D: eps and s must be nonnegative");
}

OperatorWorkspace FracOperator2D::make_workspace() const {
  OperatorWorkspace ws;
  ws.t1.resize(dim());
  ws.t2.resize(dim());
  ws.tr_in.resize(dim());
  ws.tr_out.resize(dim());
  ws.tz1 = matvec1_.make_workspace();
  ws.tz2 = matvec2_.make_workspace();
  return ws;
}

void FracOperator2D::apply_riesz(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const {
  const std::size_t n = dim();
  if (v.size() != n || out.size() != n) throw std::invalid_argument("FracOperator2D: dimension mismatch");
  // Axis-2 pass: rows are contiguous.
  for (std::size_t i1 = 0; i1 < m1_; ++i1) {
    matvec2_.apply(v.subspan(i1 * m2_, m2_), std::span<double>(ws.t2).subspan(i1 * m2_, m2_), ws.tz2);
  }
  // Axis-1 pass on the transposed grid.
  transpose(v, m1_, m2_, ws.tr_in);
  for (std::size_t i2 = 0; i2 < m2_; ++i2) {
    matvec1_.apply(std::span<const double>(ws.tr_in).subspan(i2 * m1_, m1_),
                   std::span<double>(ws.tr_out).subspan(i2 * m1_, m1_), ws.tz1);
  }
  transpose(ws.tr_out, m2_, m1_, ws.t1);
  for (std::size_t i = 0; i < n; ++i) out[i] = cbar1_ * ws.t1[i] + cbar2_ * ws.t2[i];
}

void FracOperator2D::apply(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const {
  const std::size_t n = dim();
  if (v.size() != n || out.size() != n) throw std::invalid_argument("FracOperator2D: dimension mismatch");
  apply_riesz(v, out, ws);
  const double idc = identity_coeff();
  const double dfc = diffusion_coeff();
  for (std::size_t i = 0; i < n; ++i) out[i] = idc * v[i] - dfc * out[i];
}

std::vector<double> FracOperator2D::apply(std::span<const double> v) const {
  std::vector<double> out(v.size());
  OperatorWorkspace ws = make_workspace();
  apply(v, out, ws);
  return out;
}

}  // namespace fracsolve
