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

#ifndef FRACSOLVE_FFT_HPP
#define FRACSOLVE_FFT_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fracsolve {

using cdouble = std::complex<double>;

/// Scratch buffers for one in-flight transform. Plans are immutable and
/// shareable; each concurrent caller owns its workspace.
struct FftWorkspace {
  std::vector<cdouble> conv;
};

/// Complex DFT of a fixed length. Power-of-two lengths run on an iterative
/// radix-2 kernel with a precomputed twiddle table; all other lengths go
/// through Bluestein's chirp-z factorization over a padded power-of-two
/// transform. forward computes X_k = sum_j x_j e^{-2*pi*i*jk/n}; inverse
/// includes the 1/n scaling.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  bool is_pow2() const { return conv_len_ == 0; }

  FftWorkspace make_workspace() const;

  void forward(std::span<cdouble> x, FftWorkspace& ws) const;
  void inverse(std::span<cdouble> x, FftWorkspace& ws) const;

  // Allocating conveniences for cold paths and tests.
  std::vector<cdouble> forward(std::vector<cdouble> x) const;
  std::vector<cdouble> inverse(std::vector<cdouble> x) const;

 private:
  void radix2(std::span<cdouble> x, bool inv) const;
  void bluestein(std::span<cdouble> x, bool inv, FftWorkspace& ws) const;

  std::size_t n_ = 0;
  std::vector<cdouble> twiddle_;     // e^{-2 pi i k/n}, k < n/2
  std::vector<std::uint32_t> bitrev_;

  // Bluestein data; empty when n is a power of two.
  std::size_t conv_len_ = 0;
  std::vector<cdouble> chirp_;       // e^{-i pi k^2 / n}
  std::vector<cdouble> kernel_fft_;  // transform of the circular chirp kernel
  std::unique_ptr<FftPlan> inner_;
};

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

}  // namespace fracsolve

#endif  // FRACSOLVE_FFT_HPP
