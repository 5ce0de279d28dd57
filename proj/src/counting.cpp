// Copyright 2026 The dnasynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dnasynth/counting.hpp"

#include "dnasynth/error.hpp"

#include <algorithm>

namespace dnasynth {

namespace detail {

namespace {

const BigCount&
zero()
{
  static const BigCount z = 0;
  return z;
}

} // namespace

LayeredCounts::LayeredCounts(int max_n, int ell, bool track_gc, Execution policy)
  : max_n_(max_n)
  , ell_(ell)
  , track_gc_(track_gc)
{
  if (max_n < 0) {
    throw ParamError("negative sequence length");
  }
  if (ell < 1) {
    throw ParamError("run-length limit must be at least 1");
  }
  layers_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    fill_layer(n, policy);
  }
}

std::size_t
LayeredCounts::index(int n, int run_idx, int gc, int budget) const noexcept
{
  const std::size_t width = 4 * static_cast<std::size_t>(n) + 1;
  return (static_cast<std::size_t>(run_idx) * gc_dim(n) + static_cast<std::size_t>(gc)) * width +
         static_cast<std::size_t>(budget);
}

const BigCount&
LayeredCounts::at(int n, int run_idx, int gc, long long budget) const
{
  if (n < 1 || budget < 0 || gc < 0 || (track_gc_ ? gc > n : gc != 0)) {
    return zero();
  }
  if (n > max_n_) {
    throw ParamError("length " + std::to_string(n) + " exceeds table size " + std::to_string(max_n_));
  }
  const int clamped = static_cast<int>(std::min<long long>(budget, 4LL * n));
  return layers_[static_cast<std::size_t>(n)][index(n, run_idx, gc, clamped)];
}

std::size_t
LayeredCounts::cell_count() const noexcept
{
  std::size_t total = 0;
  for (const auto& layer : layers_) {
    total += layer.size();
  }
  return total;
}

BigCount
LayeredCounts::compute(int n, int run_idx, int gc, int budget) const
{
  const Run last = run_at(run_idx);
  if (n < last.len || budget < leading_run_cost(last)) {
    return 0;
  }
  const int rest_gc = track_gc_ ? gc - gc_content(last) : 0;
  if (n == last.len) {
    return rest_gc == 0 ? 1 : 0;
  }
  BigCount sum = 0;
  const int runs = 4 * ell_;
  for (int prev = 0; prev < runs; ++prev) {
    const Symbol prev_symbol = run_at(prev).symbol;
    if (prev_symbol == last.symbol) {
      continue;
    }
    sum += at(n - last.len, prev, rest_gc, prefix_budget(budget, last, prev_symbol));
  }
  return sum;
}

void
LayeredCounts::fill_layer(int n, Execution policy)
{
  const int runs = 4 * ell_;
  const int gcs = static_cast<int>(gc_dim(n));
  const int width = 4 * n + 1;
  auto& layer = layers_[static_cast<std::size_t>(n)];
  layer.resize(static_cast<std::size_t>(runs) * gcs * width);

  const long long cells = static_cast<long long>(layer.size());
  if (policy == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long long flat = 0; flat < cells; ++flat) {
      const int budget = static_cast<int>(flat % width);
      const int gc = static_cast<int>((flat / width) % gcs);
      const int run_idx = static_cast<int>(flat / (static_cast<long long>(width) * gcs));
      layer[static_cast<std::size_t>(flat)] = compute(n, run_idx, gc, budget);
    }
  } else {
    for (int run_idx = 0; run_idx < runs; ++run_idx) {
      for (int gc = 0; gc < gcs; ++gc) {
        for (int budget = 0; budget < width; ++budget) {
          layer[index(n, run_idx, gc, budget)] = compute(n, run_idx, gc, budget);
        }
      }
    }
  }
}

} // namespace detail

namespace {

void
check_run(const Run& r, int ell)
{
  if (r.len < 1) {
    throw ConstraintError("run length must be positive");
  }
  if (r.len > ell) {
    throw ConstraintError("run exceeds ℓ");
  }
}

void
check_length(int n, int max_n)
{
  if (n > max_n) {
    throw ParamError("length " + std::to_string(n) + " exceeds table size " + std::to_string(max_n));
  }
}

} // namespace

RllCountTable::RllCountTable(int max_n, int ell, Execution policy)
  : counts_(max_n, ell, false, policy)
{
}

const BigCount&
RllCountTable::count(int n, const Run& last, long long budget) const
{
  check_run(last, ell());
  check_length(n, max_n());
  return counts_.at(n, run_index(last), 0, budget);
}

BigCount
RllCountTable::total(int n, long long budget) const
{
  check_length(n, max_n());
  BigCount sum = 0;
  for (int r = 0; r < 4 * ell(); ++r) {
    sum += counts_.at(n, r, 0, budget);
  }
  return sum;
}

BalancedCountTable::BalancedCountTable(int max_n, int ell, Execution policy)
  : counts_(max_n, ell, true, policy)
{
}

const BigCount&
BalancedCountTable::count(int n, const Run& last, int gc, long long budget) const
{
  check_run(last, ell());
  check_length(n, max_n());
  return counts_.at(n, run_index(last), gc, budget);
}

BigCount
BalancedCountTable::total_with_gc(int n, int gc, long long budget) const
{
  check_length(n, max_n());
  BigCount sum = 0;
  for (int r = 0; r < 4 * ell(); ++r) {
    sum += counts_.at(n, r, gc, budget);
  }
  return sum;
}

BigCount
BalancedCountTable::total(int n, const Epsilon& eps, long long budget) const
{
  const GcWindow window = gc_window(n, eps);
  BigCount sum = 0;
  for (int m = std::max(window.lo, 0); m <= std::min(window.hi, n); ++m) {
    sum += total_with_gc(n, m, budget);
  }
  return sum;
}

BigCount
count_rll(int n, const Run& last, long long budget, int ell)
{
  check_run(last, ell);
  return RllCountTable(std::max(n, 0), ell).count(n, last, budget);
}

BigCount
count_rll_total(int n, int ell, long long budget)
{
  return RllCountTable(n, ell).total(n, budget);
}

BigCount
count_balanced(int n, const Run& last, int gc, long long budget, int ell)
{
  check_run(last, ell);
  return BalancedCountTable(std::max(n, 0), ell).count(n, last, gc, budget);
}

BigCount
count_balanced_total(int n, int ell, const Epsilon& eps, long long budget)
{
  return BalancedCountTable(n, ell).total(n, eps, budget);
}

namespace reference {

RecursiveCounter::RecursiveCounter(int ell)
  : ell_(ell)
{
}

BigCount
RecursiveCounter::rll(int n, const Run& last, long long budget)
{
  check_run(last, ell_);
  if (n < last.len || budget < leading_run_cost(last)) {
    return 0;
  }
  if (n == last.len) {
    return 1;
  }
  const auto key = std::make_tuple(n, run_index(last), budget);
  if (auto it = rll_memo_.find(key); it != rll_memo_.end()) {
    return it->second;
  }
  BigCount sum = 0;
  for (int len = 1; len <= ell_; ++len) {
    for (int a = 1; a <= 4; ++a) {
      const Run prev{ static_cast<Symbol>(a), len };
      if (prev.symbol != last.symbol) {
        sum += rll(n - last.len, prev, prefix_budget(budget, last, prev.symbol));
      }
    }
  }
  rll_memo_.emplace(key, sum);
  return sum;
}

BigCount
RecursiveCounter::balanced(int n, const Run& last, int gc, long long budget)
{
  check_run(last, ell_);
  if (n < last.len || budget < leading_run_cost(last)) {
    return 0;
  }
  if (n == last.len) {
    return gc_content(last) == gc ? 1 : 0;
  }
  const auto key = std::make_tuple(n, run_index(last), gc, budget);
  if (auto it = balanced_memo_.find(key); it != balanced_memo_.end()) {
    return it->second;
  }
  BigCount sum = 0;
  for (int len = 1; len <= ell_; ++len) {
    for (int a = 1; a <= 4; ++a) {
      const Run prev{ static_cast<Symbol>(a), len };
      if (prev.symbol != last.symbol) {
        sum += balanced(n - last.len, prev, gc - gc_content(last), prefix_budget(budget, last, prev.symbol));
      }
    }
  }
  balanced_memo_.emplace(key, sum);
  return sum;
}

} // namespace reference

} // namespace dnasynth
