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

#include "fracsolve/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracsolve {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// e^{-i pi m^2 / n} evaluated with the exponent reduced mod 2n so that the
// argument passed to sin/cos stays small.
cdouble chirp_factor(std::size_t m, std::size_t n) {
  const std::uint64_t m2 = (static_cast<std::uint64_t>(m) * m) % (2 * static_cast<std::uint64_t>(n));
  const double angle = -std::numbers::pi * static_cast<double>(m2) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FftPlan: length must be positive");
  if (is_power_of_two(n)) {
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      twiddle_[k] = {std::cos(angle), std::sin(angle)};
    }
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
      bitrev_[i] = static_cast<std::uint32_t>(r);
    }
  } else {
    conv_len_ = next_pow2(2 * n - 1);
    inner_ = std::make_unique<FftPlan>(conv_len_);
    chirp_.resize(n);
    for (std::size_t k = 0; k < n; ++k) chirp_[k] = chirp_factor(k, n);
    // Circular kernel b_m = conj(chirp_m), wrapped so the linear convolution
    // of length 2n-1 is recovered from a length conv_len_ circular one.
    std::vector<cdouble> kernel(conv_len_, cdouble{0.0, 0.0});
    for (std::size_t m = 0; m < n; ++m) {
      const cdouble b = std::conj(chirp_[m]);
      kernel[m] = b;
      if (m != 0) kernel[conv_len_ - m] = b;
    }
    FftWorkspace ws;
    inner_->forward(kernel, ws);
    kernel_fft_ = std::move(kernel);
  }
}

FftWorkspace FftPlan::make_workspace() const {
  FftWorkspace ws;
  if (conv_len_ != 0) ws.conv.resize(conv_len_);
  return ws;
}

void FftPlan::radix2(std::span<cdouble> x, bool inv) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        cdouble w = twiddle_[j * step];
        if (inv) w = std::conj(w);
        const cdouble u = x[base + j];
        const cdouble t = x[base + j + half] * w;
        x[base + j] = u + t;
        x[base + j + half] = u - t;
      }
    }
  }
  if (inv) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : x) v *= scale;
  }
}

void FftPlan::bluestein(std::span<cdouble> x, bool inv, FftWorkspace& ws) const {
  const std::size_t n = n_;
  if (ws.conv.size() != conv_len_) ws.conv.assign(conv_len_, cdouble{});
  auto& a = ws.conv;
  for (std::size_t k = 0; k < n; ++k) {
    const cdouble z = inv ? std::conj(chirp_[k]) : chirp_[k];
    a[k] = x[k] * z;
  }
  for (std::size_t k = n; k < conv_len_; ++k) a[k] = cdouble{0.0, 0.0};

  FftWorkspace inner_ws;  // inner plan is power of two: no scratch needed
  inner_->forward(a, inner_ws);
  if (inv) {
    // DFT with conjugated chirp == conjugated kernel transform.
    for (std::size_t k = 0; k < conv_len_; ++k) a[k] *= std::conj(kernel_fft_[k]);
  } else {
    for (std::size_t k = 0; k < conv_len_; ++k) a[k] *= kernel_fft_[k];
  }
  inner_->inverse(a, inner_ws);

  for (std::size_t k = 0; k < n; ++k) {
    const cdouble z = inv ? std::conj(chirp_[k]) : chirp_[k];
    x[k] = a[k] * z;
  }
  if (inv) {
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) x[k] *= scale;
  }
}

void FftPlan::forward(std::span<cdouble> x, FftWorkspace& ws) const {
  if (x.size() != n_) throw std::invalid_argument("FftPlan::forward: length mismatch");
  if (conv_len_ == 0) {
    radix2(x, false);
  } else {
    bluestein(x, false, ws);
  }
}

void FftPlan::inverse(std::span<cdouble> x, FftWorkspace& ws) const {
  if (x.size() != n_) throw std::invalid_argument("FftPlan::inverse: length mismatch");
  if (conv_len_ == 0) {
    radix2(x, true);
  } else {
    bluestein(x, true, ws);
  }
}

std::vector<cdouble> FftPlan::forward(std::vector<cdouble> x) const {
  FftWorkspace ws = make_workspace();
  forward(std::span<cdouble>(x), ws);
  return x;
}

std::vector<cdouble> FftPlan::inverse(std::vector<cdouble> x) const {
  FftWorkspace ws = make_workspace();
  inverse(std::span<cdouble>(x), ws);
  return x;
}

}  // namespace fracsolve
