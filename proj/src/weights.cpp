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

#include "fracsolve/weights.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace fracsolve {

const char* scheme_name(SchemeId s) { return s == SchemeId::PQ10 ? "pq10" : "pq1m1"; }

std::optional<SchemeId> scheme_from_name(std::string_view name) {
  if (name == "pq10") return SchemeId::PQ10;
  if (name == "pq1m1") return SchemeId::PQ1M1;
  return std::nullopt;
}

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw std::invalid_argument("fractional order must lie in the open interval (1,2)");
  }
}

std::vector<double> gl_coeffs(FracOrder alpha, std::size_t n) {
  const double a = alpha.value();
  std::vector<double> g(n + 1);
  g[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    g[k] = (1.0 - (a + 1.0) / static_cast<double>(k)) * g[k - 1];
  }
  return g;
}

WeightVector wsgd_weights(FracOrder alpha, SchemeId scheme, std::size_t n) {
  const double a = alpha.value();
  const std::vector<double> g = gl_coeffs(alpha, n);
  WeightVector wv{alpha, scheme, std::vector<double>(n + 1)};
  if (scheme == SchemeId::PQ10) {
    const double cp = a / 2.0;
    const double cq = (2.0 - a) / 2.0;
    wv.w[0] = cp * g[0];
    for (std::size_t k = 1; k <= n; ++k) wv.w[k] = cp * g[k] + cq * g[k - 1];
  } else {
    const double cp = (a + 2.0) / 4.0;
    const double cq = (2.0 - a) / 4.0;
    for (std::size_t k = 0; k <= n && k < 2; ++k) wv.w[k] = cp * g[k];
    for (std::size_t k = 2; k <= n; ++k) wv.w[k] = cp * g[k] + cq * g[k - 2];
  }
  return wv;
}

namespace {

struct WeightCache {
  using Key = std::tuple<std::uint64_t, int, std::size_t>;
  std::map<Key, std::shared_ptr<const WeightVector>> entries;
  std::shared_mutex mutex;
};

WeightCache& weight_cache() {
  static WeightCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const WeightVector> wsgd_weights_cached(FracOrder alpha, SchemeId scheme, std::size_t n) {
  auto& cache = weight_cache();
  const WeightCache::Key key{std::bit_cast<std::uint64_t>(alpha.value()), static_cast<int>(scheme), n};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  auto value = std::make_shared<const WeightVector>(wsgd_weights(alpha, scheme, n));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.entries.emplace(key, std::move(value));
  (void)inserted;  // somebody may have raced us; keep the first entry
  return it->second;
}

WeightReport weight_report(FracOrder alpha, SchemeId scheme, std::size_t m) {
  if (m < 3) throw std::invalid_argument("weight_report: m must be at least 3");
  const double a = alpha.value();
  const auto wv = wsgd_weights_cached(alpha, scheme, m);
  const auto& w = wv->w;

  WeightReport rep;
  rep.alpha = a;
  rep.scheme = scheme;
  rep.partial_sums.resize(m + 1);
  double s = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    s += w[k];
    rep.partial_sums[k] = s;
  }
  rep.tail_magnitude = std::abs(rep.partial_sums[m]);
  rep.w0_positive = w[0] > 0.0;
  rep.w1_negative = w[1] < 0.0;

  const double tol = 1e-13;
  if (scheme == SchemeId::PQ10) {
    const double w0 = a / 2.0;
    const double w1 = (2.0 - a - a * a) / 2.0;
    const double w2 = a * (a * a + a - 4.0) / 4.0;
    rep.leading_closed_forms_match =
        std::abs(w[0] - w0) <= tol && std::abs(w[1] - w1) <= tol && std::abs(w[2] - w2) <= tol;
    // 1 >= w0 >= w3 >= w4 >= ... >= 0
    rep.monotone_chain = w[0] <= 1.0 && w[0] >= w[3];
    for (std::size_t k = 3; k < m && rep.monotone_chain; ++k) {
      if (w[k] < w[k + 1]) rep.monotone_chain = false;
    }
    rep.monotone_chain = rep.monotone_chain && w[m] >= 0.0;
    rep.partial_sums_negative = true;
    for (std::size_t k = 2; k <= m; ++k) {
      if (!(rep.partial_sums[k] < 0.0)) rep.partial_sums_negative = false;
    }
  } else {
    const double w0 = (a + 2.0) / 4.0;
    const double w1 = -a * (2.0 + a) / 4.0;
    const double w2 = (a * a * a + a * a - 4.0 * a + 4.0) / 8.0;
    rep.leading_closed_forms_match =
        std::abs(w[0] - w0) <= tol && std::abs(w[1] - w1) <= tol && std::abs(w[2] - w2) <= tol;
    // 1 >= w0 >= w2 >= w4 >= ... >= 0 over the even indices
    rep.monotone_chain = w[0] <= 1.0;
    for (std::size_t k = 0; k + 2 <= m && rep.monotone_chain; k += 2) {
      if (w[k] < w[k + 2]) rep.monotone_chain = false;
    }
    const std::size_t last_even = (m % 2 == 0) ? m : m - 1;
    rep.monotone_chain = rep.monotone_chain && w[last_even] >= 0.0;
    rep.partial_sums_negative = rep.partial_sums[1] < 0.0;
    for (std::size_t k = 3; k <= m; ++k) {
      if (!(rep.partial_sums[k] < 0.0)) rep.partial_sums_negative = false;
    }
  }
  return rep;
}

}  // namespace fracsolve
