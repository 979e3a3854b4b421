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

#include "fracsolve/tau.hpp"

#include <cmath>
#include <stdexcept>

namespace fracsolve {

Dst1Plan::Dst1Plan(std::size_t m)
    : m_(m), fft_(2 * (m + 1)), scale_(std::sqrt(2.0 / static_cast<double>(m + 1))) {
  if (m == 0) throw std::invalid_argument("Dst1Plan: size must be positive");
}

DstWorkspace Dst1Plan::make_workspace() const {
  DstWorkspace ws;
  ws.ext.resize(fft_.size());
  ws.fft = fft_.make_workspace();
  return ws;
}

void Dst1Plan::apply(std::span<const double> in, std::span<double> out, DstWorkspace& ws) const {
  if (in.size() != m_ || out.size() != m_) throw std::invalid_argument("Dst1Plan::apply: dimension mismatch");
  const std::size_t len = fft_.size();  // 2(m+1)
  if (ws.ext.size() != len) ws.ext.resize(len);
  ws.ext[0] = cdouble{0.0, 0.0};
  ws.ext[m_ + 1] = cdouble{0.0, 0.0};
  for (std::size_t i = 1; i <= m_; ++i) {
    ws.ext[i] = cdouble{in[i - 1], 0.0};
    ws.ext[len - i] = cdouble{-in[i - 1], 0.0};
  }
  fft_.forward(std::span<cdouble>(ws.ext), ws.fft);
  for (std::size_t j = 1; j <= m_; ++j) out[j - 1] = -0.5 * scale_ * ws.ext[j].imag();
}

std::vector<double> Dst1Plan::apply(std::span<const double> in) const {
  std::vector<double> out(in.size());
  DstWorkspace ws = make_workspace();
  apply(in, out, ws);
  return out;
}

std::vector<double> tau_eigs(const SymToeplitz& t) {
  const std::size_t m = t.dim();
  if (m == 0) throw std::invalid_argument("tau_eigs: empty matrix");
  const std::size_t len = 2 * (m + 1);
  FftPlan fft(len);
  std::vector<cdouble> buf(len, cdouble{0.0, 0.0});
  buf[0] = cdouble{t.col[0], 0.0};
  for (std::size_t k = 1; k < m; ++k) {
    buf[k] = cdouble{t.col[k], 0.0};
    buf[len - k] = cdouble{t.col[k], 0.0};
  }
  buf = fft.forward(std::move(buf));
  std::vector<double> lambda(m);
  for (std::size_t j = 1; j <= m; ++j) lambda[j - 1] = buf[j].real();
  return lambda;
}

DenseMatrix tau_dense(const SymToeplitz& t) {
  const std::size_t m = t.dim();
  if (m > 512) throw std::invalid_argument("tau_dense: M above the 512 oracle limit");
  auto c = [&](std::size_t k) { return k < m ? t.col[k] : 0.0; };
  DenseMatrix out(m, m);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      const std::size_t s = i + j;
      const double hankel = c(s) + (2 * (m + 1) >= s ? c(2 * (m + 1) - s) : 0.0);
      out(i - 1, j - 1) = c(d) - hankel;
    }
  }
  return out;
}

namespace {

std::vector<double> validated_positive(std::vector<double> lambda, const char* who) {
  for (double v : lambda) {
    if (!(v > 0.0)) {
      throw std::invalid_argument(std::string(who) + ": nonpositive preconditioner eigenvalue; "
                                  "parameter combination does not yield an SPD preconditioner");
    }
  }
  return lambda;
}

}  // namespace

TauPrecond1D::TauPrecond1D(std::vector<double> lambda)
    : lambda_(validated_positive(std::move(lambda), "TauPrecond1D")),
      inv_(lambda_.size()),
      inv_sqrt_(lambda_.size()),
      dst_(lambda_.size()) {
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    inv_[i] = 1.0 / lambda_[i];
    inv_sqrt_[i] = 1.0 / std::sqrt(lambda_[i]);
  }
}

TauPrecond1D TauPrecond1D::build(const FracOperator1D& op) {
  const std::vector<double> tau = tau_eigs(op.G());
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff() * op.cbar_value();
  std::vector<double> lambda(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) lambda[i] = idc - dfc * tau[i];
  return TauPrecond1D(std::move(lambda));
}

PrecondWorkspace TauPrecond1D::make_workspace() const {
  PrecondWorkspace ws;
  ws.a.resize(dim());
  ws.dst1 = dst_.make_workspace();
  return ws;
}

void TauPrecond1D::apply_scaled(std::span<const double> v, std::span<double> out,
                                std::span<const double> factors, PrecondWorkspace& ws) const {
  const std::size_t m = dim();
  if (v.size() != m || out.size() != m) throw std::invalid_argument("TauPrecond1D: dimension mismatch");
  if (ws.a.size() != m) ws.a.resize(m);
  dst_.apply(v, ws.a, ws.dst1);
  for (std::size_t i = 0; i < m; ++i) ws.a[i] *= factors[i];
  dst_.apply(ws.a, out, ws.dst1);
}

void TauPrecond1D::apply_inverse(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, inv_, ws);
}

void TauPrecond1D::apply_forward(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, lambda_, ws);
}

void TauPrecond1D::apply_inv_sqrt(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, inv_sqrt_, ws);
}

std::vector<double> TauPrecond1D::apply_inverse(std::span<const double> v) const {
  std::vector<double> out(v.size());
  PrecondWorkspace ws = make_workspace();
  apply_inverse(v, out, ws);
  return out;
}

namespace {

void transpose(std::span<const double> in, std::size_t rows, std::size_t cols, std::span<double> out) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
  }
}

}  // namespace

TauPrecond2D::TauPrecond2D(std::size_t m1, std::size_t m2, std::vector<double> lambda)
    : m1_(m1),
      m2_(m2),
      lambda_(validated_positive(std::move(lambda), "TauPrecond2D")),
      dst1_(m1),
      dst2_(m2) {
  if (lambda_.size() != m1 * m2) throw std::invalid_argument("TauPrecond2D: eigenvalue grid size mismatch");
  inv_t_.resize(lambda_.size());
  inv_sqrt_t_.resize(lambda_.size());
  fwd_t_.resize(lambda_.size());
  // Factor grids are stored transposed (i2 major) to match the layout in
  // which the scaling step runs.
  for (std::size_t i1 = 0; i1 < m1_; ++i1) {
    for (std::size_t i2 = 0; i2 < m2_; ++i2) {
      const double lam = lambda_[i1 * m2_ + i2];
      inv_t_[i2 * m1_ + i1] = 1.0 / lam;
      inv_sqrt_t_[i2 * m1_ + i1] = 1.0 / std::sqrt(lam);
      fwd_t_[i2 * m1_ + i1] = lam;
    }
  }
}

TauPrecond2D TauPrecond2D::build(const FracOperator2D& op) {
  const std::vector<double> lam1 = tau_eigs(op.G1());
  const std::vector<double> lam2 = tau_eigs(op.G2());
  const double idc = op.identity_coeff();
  const double dfc = op.diffusion_coeff();
  std::vector<double> lambda(op.dim());
  for (std::size_t i1 = 0; i1 < op.dim1(); ++i1) {
    for (std::size_t i2 = 0; i2 < op.dim2(); ++i2) {
      lambda[i1 * op.dim2() + i2] = idc - dfc * (op.cbar1() * lam1[i1] + op.cbar2() * lam2[i2]);
    }
  }
  return TauPrecond2D(op.dim1(), op.dim2(), std::move(lambda));
}

PrecondWorkspace TauPrecond2D::make_workspace() const {
  PrecondWorkspace ws;
  ws.a.resize(dim());
  ws.b.resize(dim());
  ws.dst1 = dst1_.make_workspace();
  ws.dst2 = dst2_.make_workspace();
  return ws;
}

void TauPrecond2D::apply_scaled(std::span<const double> v, std::span<double> out,
                                std::span<const double> factors_t, PrecondWorkspace& ws) const {
  const std::size_t n = dim();
  if (v.size() != n || out.size() != n) throw std::invalid_argument("TauPrecond2D: dimension mismatch");
  if (ws.a.size() != n) ws.a.resize(n);
  if (ws.b.size() != n) ws.b.resize(n);
  // (S1 (x) S2): axis-2 transform on rows, then axis-1 on the transpose.
  for (std::size_t i1 = 0; i1 < m1_; ++i1) {
    dst2_.apply(v.subspan(i1 * m2_, m2_), std::span<double>(ws.a).subspan(i1 * m2_, m2_), ws.dst2);
  }
  transpose(ws.a, m1_, m2_, ws.b);
  for (std::size_t i2 = 0; i2 < m2_; ++i2) {
    auto seg = std::span<double>(ws.b).subspan(i2 * m1_, m1_);
    dst1_.apply(seg, seg, ws.dst1);
    for (std::size_t i1 = 0; i1 < m1_; ++i1) seg[i1] *= factors_t[i2 * m1_ + i1];
    dst1_.apply(seg, seg, ws.dst1);
  }
  transpose(ws.b, m2_, m1_, ws.a);
  for (std::size_t i1 = 0; i1 < m1_; ++i1) {
    dst2_.apply(std::span<const double>(ws.a).subspan(i1 * m2_, m2_), out.subspan(i1 * m2_, m2_), ws.dst2);
  }
}

void TauPrecond2D::apply_inverse(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, inv_t_, ws);
}

void TauPrecond2D::apply_forward(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, fwd_t_, ws);
}

void TauPrecond2D::apply_inv_sqrt(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const {
  apply_scaled(v, out, inv_sqrt_t_, ws);
}

std::vector<double> TauPrecond2D::apply_inverse(std::span<const double> v) const {
  std::vector<double> out(v.size());
  PrecondWorkspace ws = make_workspace();
  apply_inverse(v, out, ws);
  return out;
}

}  // namespace fracsolve
