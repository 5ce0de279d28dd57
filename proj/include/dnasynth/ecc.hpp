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
#include "dnasynth/codec_balanced.hpp"
#include "dnasynth/dna.hpp"
#include "dnasynth/vt.hpp"

#include <memory>
#include <span>
#include <vector>

namespace dnasynth {

/// Complement used to pair parity symbols: f(a) = 5 - a. Exactly one of a
/// and f(a) is C or G.
inline constexpr Symbol
complement(Symbol a) noexcept
{
  return static_cast<Symbol>(5 - value(a));
}

/// Smallest v with 4^v >= n.
int
ceil_log4(long long n) noexcept;

struct EccParams
{
  int n = 0;
  int ell = 2;
  Epsilon epsilon;
  long long budget = 0;
};

/// Single-indel-correcting constrained code. A codeword is a constrained
/// data block c' of length k1 (ell-RLL, eps-balanced at length k1, synthesis
/// time <= T1) followed by 2v + 8 parity symbols:
///
///   a' a' f(a') f(a') beta f(beta) tau_1 f(tau_1) ... tau_v f(tau_v) b f(b)
///
/// where a' = shifted_mod4(last(c') + 2), tau is the base-4 form of the
/// signature syndrome of c' mod n, and b the shifted symbol sum of c'. Each
/// parity symbol costs at most 4 cycles: T1 = T - 4(2v + 8).
class EccCodec
{
public:
  /// Throws ParamError when ell < 2, k1 < 1, T1 < k1 or the inner code is
  /// empty.
  explicit EccCodec(const EccParams& params);
  EccCodec(const EccParams& params, std::shared_ptr<const BalancedCountTable> table);

  const EccParams& params() const noexcept { return params_; }
  int length() const noexcept { return params_.n; }
  int digits() const noexcept { return digits_; }
  int parity_length() const noexcept { return 2 * digits_ + 8; }
  int data_length() const noexcept { return params_.n - parity_length(); }
  long long inner_budget() const noexcept { return params_.budget - 4LL * parity_length(); }
  const BalancedCodec& inner() const noexcept { return inner_; }

  std::size_t message_bits() const { return inner_.message_bits(); }

  /// Parity block for a data word of length k1.
  DnaSeq parity(std::span<const Symbol> data) const;

  DnaSeq encode(const MessageBits& message) const;

  /// Accepts words of length n - 1, n or n + 1.
  MessageBits decode(std::span<const Symbol> received) const;

  /// The data block of the codeword within one indel of `received`.
  DnaSeq recover_data(std::span<const Symbol> received) const;

private:
  EccParams params_;
  int digits_;
  BalancedCodec inner_;
};

/// Every distinct sequence reachable from c by exactly one insertion or one
/// deletion, sorted lexicographically.
std::vector<DnaSeq>
indel_ball(std::span<const Symbol> c);

} // namespace dnasynth
