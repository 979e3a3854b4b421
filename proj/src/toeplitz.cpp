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

#include "fracsolve/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracsolve {

SymToeplitz build_G(FracOrder alpha, SchemeId scheme, std::size_t M) {
  if (M < 2) throw std::invalid_argument("build_G: M must be at least 2");
  const auto wv = wsgd_weights_cached(alpha, scheme, M);
  const auto& w = wv->w;
  SymToeplitz t;
  t.col.resize(M);
  t.col[0] = 2.0 * w[1];
  t.col[1] = w[0] + w[2];
  for (std::size_t k = 2; k < M; ++k) t.col[k] = w[k + 1];
  return t;
}

double cbar(FracOrder alpha, double hx) {
  if (!(hx > 0.0)) throw std::invalid_argument("cbar: spatial step must be positive");
  const double a = alpha.value();
  return -1.0 / (2.0 * std::pow(hx, a) * std::cos(a * std::numbers::pi / 2.0));
}

ToeplitzMatvec::ToeplitzMatvec(SymToeplitz t)
    : t_(std::move(t)), len_(next_pow2(2 * t_.dim())), fft_(len_) {
  const std::size_t m = t_.dim();
  if (m == 0) throw std::invalid_argument("ToeplitzMatvec: empty matrix");
  // First column of the embedding circulant: [c_0..c_{M-1}, 0.., c_{M-1}..c_1].
  std::vector<cdouble> col(len_, cdouble{0.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) col[k] = cdouble{t_.col[k], 0.0};
  for (std::size_t k = 1; k < m; ++k) col[len_ - k] = cdouble{t_.col[k], 0.0};
  col_fft_ = fft_.forward(std::move(col));
}

ToeplitzWorkspace ToeplitzMatvec::make_workspace() const {
  ToeplitzWorkspace ws;
  ws.buf.resize(len_);
  ws.fft = fft_.make_workspace();
  return ws;
}

void ToeplitzMatvec::apply(std::span<const double> v, std::span<double> out, ToeplitzWorkspace& ws) const {
  const std::size_t m = t_.dim();
  if (v.size() != m || out.size() != m) throw std::invalid_argument("ToeplitzMatvec::apply: dimension mismatch");
  if (ws.buf.size() != len_) ws.buf.resize(len_);
  for (std::size_t i = 0; i < m; ++i) ws.buf[i] = cdouble{v[i], 0.0};
  for (std::size_t i = m; i < len_; ++i) ws.buf[i] = cdouble{0.0, 0.0};
  fft_.forward(std::span<cdouble>(ws.buf), ws.fft);
  for (std::size_t i = 0; i < len_; ++i) ws.buf[i] *= col_fft_[i];
  fft_.inverse(std::span<cdouble>(ws.buf), ws.fft);
  for (std::size_t i = 0; i < m; ++i) out[i] = ws.buf[i].real();
}

std::vector<double> ToeplitzMatvec::apply(std::span<const double> v) const {
  std::vector<double> out(v.size());
  ToeplitzWorkspace ws = make_workspace();
  apply(v, out, ws);
  return out;
}

}  // namespace fracsolve
