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

#include "dnasynth/bits.hpp"

#include "dnasynth/error.hpp"

#include <cmath>
#include <limits>

namespace dnasynth {

std::string
to_decimal(const BigCount& x)
{
  return x.get_str(10);
}

BigCount
parse_decimal(std::string_view text)
{
  if (text.empty()) {
    throw ParseError("empty integer", 0);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("invalid decimal digit", i);
    }
  }
  return BigCount(std::string(text), 10);
}

std::size_t
bit_length(const BigCount& x)
{
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t
floor_log2(const BigCount& x)
{
  if (sgn(x) <= 0) {
    throw RangeError("log of a nonpositive count");
  }
  return bit_length(x) - 1;
}

std::size_t
ceil_log4(const BigCount& x)
{
  if (sgn(x) <= 0) {
    throw RangeError("log of a nonpositive count");
  }
  // 4^k >= x  <=>  2k >= bit_length(x - 1)
  const BigCount below = x - 1;
  return (bit_length(below) + 1) / 2;
}

double
log2_approx(const BigCount& x)
{
  if (sgn(x) == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

MessageBits::MessageBits(std::vector<std::uint8_t> bits)
  : bits_(std::move(bits))
{
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw ParseError("bit value other than 0/1", i);
    }
  }
}

MessageBits
MessageBits::from_binary(std::string_view text)
{
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("invalid bit character at offset " + std::to_string(i), i);
    }
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return MessageBits(std::move(bits));
}

namespace {

int
hex_value(char c)
{
  if (c >= '0' && c <= '9') {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f') {
    return c - 'a' + 10;
  }
  if (c >= 'A' && c <= 'F') {
    return c - 'A' + 10;
  }
  return -1;
}

} // namespace

MessageBits
MessageBits::from_hex(std::string_view text, std::size_t nbits)
{
  const std::size_t digits = 2 * ((nbits + 7) / 8);
  if (text.size() != digits) {
    throw ParseError("hex message of " + std::to_string(nbits) + " bits needs " +
                       std::to_string(digits) + " digits",
                     std::min(text.size(), digits));
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(digits * 4);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int v = hex_value(text[i]);
    if (v < 0) {
      throw ParseError("invalid hex character at offset " + std::to_string(i), i);
    }
    for (int b = 3; b >= 0; --b) {
      bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
  }
  for (std::size_t i = nbits; i < bits.size(); ++i) {
    if (bits[i] != 0) {
      throw ParseError("nonzero pad bit in hex message", i / 4);
    }
  }
  bits.resize(nbits);
  return MessageBits(std::move(bits));
}

MessageBits
MessageBits::from_integer(const BigCount& x, std::size_t nbits)
{
  if (sgn(x) < 0 || bit_length(x) > nbits) {
    throw RangeError("integer does not fit in " + std::to_string(nbits) + " bits");
  }
  std::vector<std::uint8_t> bits(nbits, 0);
  for (std::size_t i = 0; i < nbits; ++i) {
    bits[nbits - 1 - i] = static_cast<std::uint8_t>(mpz_tstbit(x.get_mpz_t(), i));
  }
  return MessageBits(std::move(bits));
}

BigCount
MessageBits::to_integer() const
{
  BigCount x = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) {
      mpz_setbit(x.get_mpz_t(), bits_.size() - 1 - i);
    }
  }
  return x;
}

std::string
MessageBits::to_binary() const
{
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) {
    out.push_back(static_cast<char>('0' + b));
  }
  return out;
}

std::string
MessageBits::to_hex() const
{
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = 2 * ((bits_.size() + 7) / 8);
  std::string out;
  out.reserve(digits);
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      v = (v << 1) | (i < bits_.size() ? bits_[i] : 0);
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

} // namespace dnasynth
