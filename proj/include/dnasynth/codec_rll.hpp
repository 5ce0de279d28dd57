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

/// Run order: shorter runs first, then smaller symbol.
bool
run_less(const Run& a, const Run& b) noexcept;

/// The code order on equal-length sequences: compare last runs with
/// run_less; on a tie, strip them and compare the prefixes the same way.
/// Throws ParamError for unequal lengths.
bool
seq_less(std::span<const Symbol> a, std::span<const Symbol> b);

/// Capacity-achieving enumerative code for every length-n sequence with
/// ell-RLL and synthesis time at most T. Rank M in [1, N] addresses the
/// M-th sequence under seq_less.
///
/// Const member functions are safe to call concurrently; the count table is
/// shared read-only and may back several codecs with smaller n.
class RllCodec
{
public:
  RllCodec(int n, int ell, long long budget);
  RllCodec(int n, int ell, long long budget, std::shared_ptr<const RllCountTable> table);

  int length() const noexcept { return n_; }
  int ell() const noexcept { return ell_; }
  long long budget() const noexcept { return budget_; }

  /// N(n, ell, T); zero when the constraints admit no sequence.
  const BigCount& size() const noexcept { return size_; }

  /// floor(log2 N).
  /// Throws ParamError when N == 0.
  std::size_t message_bits() const;

  /// Throws RangeError unless 1 <= rank <= N.
  DnaSeq unrank(const BigCount& rank) const;

  /// Throws ConstraintError naming the first violated constraint.
  BigCount rank(std::span<const Symbol> c) const;

  /// Message value v (MSB first) maps to rank v + 1.
  DnaSeq encode(const MessageBits& message) const;
  MessageBits decode(std::span<const Symbol> c) const;

  /// Throws ConstraintError unless c is a member of the code.
  void check_member(std::span<const Symbol> c) const;

private:
  int n_;
  int ell_;
  long long budget_;
  std::shared_ptr<const RllCountTable> table_;
  BigCount size_;
};

} // namespace dnasynth
