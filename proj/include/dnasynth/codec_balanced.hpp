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

#pragma once

#include "dnasynth/bits.hpp"
#include "dnasynth/counting.hpp"
#include "dnasynth/dna.hpp"

#include <memory>
#include <span>

namespace dnasynth {

/// (run, GC-content) bucket order: GC-content first, then run_less.
bool
pair_less(const Run& a, int gc_a, const Run& b, int gc_b) noexcept;

/// GC-major code order: smaller GC-content first, ties broken by seq_less.
bool
balanced_seq_less(std::span<const Symbol> a, std::span<const Symbol> b);

/// Enumerative code for length-n sequences with ell-RLL, GC-content in the
/// eps window of n, and synthesis time at most T. Same contract as RllCodec
/// under balanced_seq_less.
class BalancedCodec
{
public:
  BalancedCodec(int n, int ell, const Epsilon& eps, long long budget);
  BalancedCodec(int n, int ell, const Epsilon& eps, long long budget,
                std::shared_ptr<const BalancedCountTable> table);

  int length() const noexcept { return n_; }
  int ell() const noexcept { return ell_; }
  const Epsilon& epsilon() const noexcept { return eps_; }
  long long budget() const noexcept { return budget_; }
  const GcWindow& window() const noexcept { return window_; }
  const std::shared_ptr<const BalancedCountTable>& table() const noexcept { return table_; }

  const BigCount& size() const noexcept { return size_; }
  std::size_t message_bits() const;

  DnaSeq unrank(const BigCount& rank) const;
  BigCount rank(std::span<const Symbol> c) const;

  DnaSeq encode(const MessageBits& message) const;
  MessageBits decode(std::span<const Symbol> c) const;

  void check_member(std::span<const Symbol> c) const;

private:
  int n_;
  int ell_;
  Epsilon eps_;
  long long budget_;
  GcWindow window_;
  std::shared_ptr<const BalancedCountTable> table_;
  BigCount size_;
};

} // namespace dnasynth
