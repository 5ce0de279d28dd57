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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dnasynth {

/// Unbounded nonnegative integer used for DP cells and ranks.
using BigCount = mpz_class;

std::string
to_decimal(const BigCount& x);

/// Throws ParseError on anything but a plain decimal numeral.
BigCount
parse_decimal(std::string_view text);

/// Number of bits in the binary expansion of x; 0 for x == 0.
std::size_t
bit_length(const BigCount& x);

/// floor(log2 x) for x >= 1.
std::size_t
floor_log2(const BigCount& x);

/// Smallest k with 4^k >= x, for x >= 1.
std::size_t
ceil_log4(const BigCount& x);

/// log2 x as a double; -inf for x == 0.
double
log2_approx(const BigCount& x);

/// Fixed-length binary message, most-significant bit first.
class MessageBits
{
public:
  MessageBits() = default;
  explicit MessageBits(std::vector<std::uint8_t> bits);

  /// A string of '0'/'1' characters.
  static MessageBits from_binary(std::string_view text);

  /// Hex of exactly 2*ceil(nbits/8) digits; the message is the first nbits
  /// bits of the decoded bytes and the trailing pad bits must be zero.
  static MessageBits from_hex(std::string_view text, std::size_t nbits);

  /// The nbits-bit big-endian representation of x; throws RangeError if x
  /// does not fit.
  static MessageBits from_integer(const BigCount& x, std::size_t nbits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  BigCount to_integer() const;
  std::string to_binary() const;
  std::string to_hex() const;

  friend bool operator==(const MessageBits&, const MessageBits&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

} // namespace dnasynth
