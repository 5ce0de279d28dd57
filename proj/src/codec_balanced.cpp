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

#include "dnasynth/codec_balanced.hpp"

#include "dnasynth/codec_rll.hpp"
#include "dnasynth/detail/run_walk.hpp"
#include "dnasynth/error.hpp"

#include <algorithm>

namespace dnasynth {

bool
pair_less(const Run& a, int gc_a, const Run& b, int gc_b) noexcept
{
  if (gc_a != gc_b) {
    return gc_a < gc_b;
  }
  return run_less(a, b);
}

bool
balanced_seq_less(std::span<const Symbol> a, std::span<const Symbol> b)
{
  if (a.size() != b.size()) {
    throw ParamError("sequences of unequal length are not ordered");
  }
  const int ga = gc_content(a);
  const int gb = gc_content(b);
  if (ga != gb) {
    return ga < gb;
  }
  return seq_less(a, b);
}

BalancedCodec::BalancedCodec(int n, int ell, const Epsilon& eps, long long budget)
  : BalancedCodec(n, ell, eps, budget, nullptr)
{
}

BalancedCodec::BalancedCodec(int n, int ell, const Epsilon& eps, long long budget,
                             std::shared_ptr<const BalancedCountTable> table)
  : n_(n)
  , ell_(ell)
  , eps_(eps)
  , budget_(budget)
  , window_(gc_window(n, eps))
  , table_(std::move(table))
{
  if (n < 1) {
    throw ParamError("code length must be at least 1");
  }
  window_.lo = std::max(window_.lo, 0);
  window_.hi = std::min(window_.hi, n);
  if (!table_) {
    table_ = std::make_shared<const BalancedCountTable>(n, ell);
  }
  if (table_->ell() != ell || table_->max_n() < n) {
    throw ParamError("count table does not cover the requested code");
  }
  size_ = table_->total(n, eps, budget);
}

std::size_t
BalancedCodec::message_bits() const
{
  if (sgn(size_) == 0) {
    throw ParamError("constraints admit no sequence of length " + std::to_string(n_));
  }
  return floor_log2(size_);
}

DnaSeq
BalancedCodec::unrank(const BigCount& rank) const
{
  if (rank < 1 || rank > size_) {
    throw RangeError("rank " + to_decimal(rank) + " outside [1, " + to_decimal(size_) + "]");
  }
  const auto count = [this](int n, int r, int gc, long long t) -> const BigCount& {
    return table_->count_at(n, r, gc, t);
  };
  BigCount remaining = rank;
  for (int m = window_.lo; m <= window_.hi; ++m) {
    for (int r = 0; r < 4 * ell_; ++r) {
      const BigCount& bucket = table_->count_at(n_, r, m, budget_);
      if (remaining <= bucket) {
        return detail::unrank_with_last(remaining, n_, r, m, budget_, ell_, true, count);
      }
      remaining -= bucket;
    }
  }
  throw RangeError("rank exceeds code size");
}

void
BalancedCodec::check_member(std::span<const Symbol> c) const
{
  if (c.size() != static_cast<std::size_t>(n_)) {
    throw ConstraintError("length " + std::to_string(c.size()) + " != " + std::to_string(n_));
  }
  if (!is_rll(c, ell_)) {
    throw ConstraintError("run-length limit " + std::to_string(ell_) + " violated");
  }
  if (!window_.contains(gc_content(c))) {
    throw ConstraintError("GC-content " + std::to_string(gc_content(c)) + " outside [" +
                          std::to_string(window_.lo) + ", " + std::to_string(window_.hi) + "]");
  }
  if (synthesis_time(c) > budget_) {
    throw ConstraintError("synthesis time " + std::to_string(synthesis_time(c)) + " exceeds " +
                          std::to_string(budget_));
  }
}

BigCount
BalancedCodec::rank(std::span<const Symbol> c) const
{
  check_member(c);
  const auto runs = to_runs(c);
  const int gc = gc_content(c);
  const auto count = [this](int n, int r, int g, long long t) -> const BigCount& {
    return table_->count_at(n, r, g, t);
  };
  BigCount acc = 0;
  for (int m = window_.lo; m < gc; ++m) {
    acc += table_->total_with_gc(n_, m, budget_);
  }
  for (int r = 0; r < run_index(runs.back()); ++r) {
    acc += table_->count_at(n_, r, gc, budget_);
  }
  return acc + detail::rank_with_last(runs, n_, gc, budget_, true, count);
}

DnaSeq
BalancedCodec::encode(const MessageBits& message) const
{
  if (message.size() != message_bits()) {
    throw RangeError("message has " + std::to_string(message.size()) + " bits, code takes " +
                     std::to_string(message_bits()));
  }
  return unrank(message.to_integer() + 1);
}

MessageBits
BalancedCodec::decode(std::span<const Symbol> c) const
{
  const BigCount value = rank(c) - 1;
  return MessageBits::from_integer(value, message_bits());
}

} // namespace dnasynth
