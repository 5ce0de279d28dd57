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

#include "dnasynth/dna.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dnasynth {

/// s_i = 1 iff c_{i+1} >= c_i, for i in [1, n); empty for n <= 1.
std::vector<std::uint8_t>
signature(std::span<const Symbol> c);

/// Sum of i * x_i with 1-based positions.
long long
vt_syndrome(std::span<const std::uint8_t> x) noexcept;

/// Check values protecting a data word: a = VT(signature) mod `modulus`
/// (the full codeword length), b = shifted_mod4(sum of symbols).
struct Syndromes
{
  long long a = 0;
  Symbol b = Symbol::A;
  long long modulus = 1;

  friend bool operator==(const Syndromes&, const Syndromes&) = default;
};

/// Throws ParamError unless modulus >= 1.
Syndromes
compute_syndromes(std::span<const Symbol> data, long long modulus);

/// The v base-4 digits of a, most significant first, digit d written as
/// symbol d + 1. Throws RangeError unless 0 <= a < 4^v.
std::vector<Symbol>
digits_base4(long long a, int v);

long long
undigits_base4(std::span<const Symbol> digits) noexcept;

/// Recovers the length-k word x with compute_syndromes(x) == syn from y,
/// which is x with one symbol deleted (|y| == k - 1). Every insertion of
/// every symbol into y is tried and checked against the syndromes.
/// Throws UncorrectableError if nothing matches, AmbiguousDecodeError if
/// distinct words match.
DnaSeq
vt_decode_deletion(std::span<const Symbol> y, int k, const Syndromes& syn);

/// Mirror of vt_decode_deletion for |y| == k + 1: every single deletion of y
/// is a candidate.
DnaSeq
vt_decode_insertion(std::span<const Symbol> y, int k, const Syndromes& syn);

} // namespace dnasynth
