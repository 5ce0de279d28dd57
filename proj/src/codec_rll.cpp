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

#include "dnasynth/codec_rll.hpp"

#include "dnasynth/detail/run_walk.hpp"
#include "dnasynth/error.hpp"

namespace dnasynth {

bool
run_less(const Run& a, const Run& b) noexcept
{
  if (a.len != b.len) {
    return a.len < b.len;
  }
  return value(a.symbol) < value(b.symbol);
}

namespace {

int
last_run_length(std::span<const Symbol> c, std::size_t end) noexcept
{
  int len = 1;
  while (static_cast<std::size_t>(len) < end && c[end - 1 - len] == c[end - 1]) {
    ++len;
  }
  return len;
}

} // namespace

bool
seq_less(std::span<const Symbol> a, std::span<const Symbol> b)
{
  if (a.size() != b.size()) {
    throw ParamError("sequences of unequal length are not ordered");
  }
  std::size_t end = a.size();
  while (end > 0) {
    const Run ra{ a[end - 1], last_run_length(a, end) };
    const Run rb{ b[end - 1], last_run_length(b, end) };
    if (run_less(ra, rb)) {
      return true;
    }
    if (run_less(rb, ra)) {
      return false;
    }
    end -= static_cast<std::size_t>(ra.len);
  }
  return false;
}

RllCodec::RllCodec(int n, int ell, long long budget)
  : RllCodec(n, ell, budget, nullptr)
{
}

RllCodec::RllCodec(int n, int ell, long long budget, std::shared_ptr<const RllCountTable> table)
  : n_(n)
  , ell_(ell)
  , budget_(budget)
  , table_(std::move(table))
{
  if (n < 1) {
    throw ParamError("code length must be at least 1");
  }
  if (!table_) {
    table_ = std::make_shared<const RllCountTable>(n, ell);
  }
  if (table_->ell() != ell || table_->max_n() < n) {
    throw ParamError("count table does not cover the requested code");
  }
  size_ = table_->total(n, budget);
}

std::size_t
RllCodec::message_bits() const
{
  if (sgn(size_) == 0) {
    throw ParamError("constraints admit no sequence of length " + std::to_string(n_));
  }
  return floor_log2(size_);
}

DnaSeq
RllCodec::unrank(const BigCount& rank) const
{
  if (rank < 1 || rank > size_) {
    throw RangeError("rank " + to_decimal(rank) + " outside [1, " + to_decimal(size_) + "]");
  }
  const auto count = [this](int n, int r, int, long long t) -> const BigCount& {
    return table_->count_at(n, r, t);
  };
  BigCount remaining = rank;
  for (int r = 0; r < 4 * ell_; ++r) {
    const BigCount& bucket = table_->count_at(n_, r, budget_);
    if (remaining <= bucket) {
      return detail::unrank_with_last(remaining, n_, r, 0, budget_, ell_, false, count);
    }
    remaining -= bucket;
  }
  throw RangeError("rank exceeds code size");
}

void
RllCodec::check_member(std::span<const Symbol> c) const
{
  if (c.size() != static_cast<std::size_t>(n_)) {
    throw ConstraintError("length " + std::to_string(c.size()) + " != " + std::to_string(n_));
  }
  if (!is_rll(c, ell_)) {
    throw ConstraintError("run-length limit " + std::to_string(ell_) + " violated");
  }
  if (synthesis_time(c) > budget_) {
    throw ConstraintError("synthesis time " + std::to_string(synthesis_time(c)) + " exceeds " +
                          std::to_string(budget_));
  }
}

BigCount
RllCodec::rank(std::span<const Symbol> c) const
{
  check_member(c);
  const auto runs = to_runs(c);
  const auto count = [this](int n, int r, int, long long t) -> const BigCount& {
    return table_->count_at(n, r, t);
  };
  BigCount acc = 0;
  for (int r = 0; r < run_index(runs.back()); ++r) {
    acc += table_->count_at(n_, r, budget_);
  }
  return acc + detail::rank_with_last(runs, n_, 0, budget_, false, count);
}

DnaSeq
RllCodec::encode(const MessageBits& message) const
{
  if (message.size() != message_bits()) {
    throw RangeError("message has " + std::to_string(message.size()) + " bits, code takes " +
                     std::to_string(message_bits()));
  }
  return unrank(message.to_integer() + 1);
}

MessageBits
RllCodec::decode(std::span<const Symbol> c) const
{
  const BigCount value = rank(c) - 1;
  return MessageBits::from_integer(value, message_bits());
}

} // namespace dnasynth
