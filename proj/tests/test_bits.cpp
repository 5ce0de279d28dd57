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

#include "doctest.h"

#include <cmath>

using namespace dnasynth;

TEST_CASE("decimal round trip")
{
  const BigCount big = parse_decimal("123456789012345678901234567890");
  CHECK(to_decimal(big) == "123456789012345678901234567890");
  CHECK(to_decimal(BigCount(0)) == "0");
  CHECK_THROWS_AS(parse_decimal("12a"), ParseError);
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK_THROWS_AS(parse_decimal("-3"), ParseError);
}

TEST_CASE("bit lengths and logarithms")
{
  CHECK(bit_length(BigCount(0)) == 0);
  CHECK(bit_length(BigCount(1)) == 1);
  CHECK(bit_length(BigCount(16)) == 5);
  CHECK(floor_log2(BigCount(1)) == 0);
  CHECK(floor_log2(BigCount(12)) == 3);
  CHECK(floor_log2(BigCount(16)) == 4);
  for (unsigned long x = 1; x <= 300; ++x) {
    std::size_t k = 0;
    unsigned long p = 1;
    while (p < x) {
      p *= 4;
      ++k;
    }
    CHECK(ceil_log4(BigCount(x)) == k);
  }
  CHECK(log2_approx(BigCount(1024)) == doctest::Approx(10.0));
  CHECK(std::isinf(log2_approx(BigCount(0))));
  const BigCount huge = BigCount(1) << 3000;
  CHECK(log2_approx(huge) == doctest::Approx(3000.0));
}

TEST_CASE("message bits from binary and hex")
{
  const auto m = MessageBits::from_binary("1011");
  CHECK(m.size() == 4);
  CHECK(m[0]);
  CHECK_FALSE(m[1]);
  CHECK(m.to_integer() == 11);
  CHECK(m.to_binary() == "1011");
  CHECK(m.to_hex() == "b0");
  CHECK(MessageBits::from_hex("b0", 4) == m);
  CHECK(MessageBits::from_hex("B0", 4) == m);
  CHECK_THROWS_AS(MessageBits::from_hex("b1", 4), ParseError);
  CHECK_THROWS_AS(MessageBits::from_hex("b", 4), ParseError);
  CHECK_THROWS_AS(MessageBits::from_hex("b000", 4), ParseError);
  CHECK_THROWS_AS(MessageBits::from_binary("102"), ParseError);
  CHECK(MessageBits::from_binary("").size() == 0);
}

TEST_CASE("message bits from integers")
{
  CHECK(MessageBits::from_integer(5, 4).to_binary() == "0101");
  CHECK(MessageBits::from_integer(0, 3).to_binary() == "000");
  CHECK_THROWS_AS(MessageBits::from_integer(8, 3), RangeError);
  for (unsigned long x = 0; x < 256; ++x) {
    const auto m = MessageBits::from_integer(x, 8);
    CHECK(m.to_integer() == x);
    CHECK(MessageBits::from_hex(m.to_hex(), 8) == m);
  }
  const BigCount big = (BigCount(1) << 130) - 1;
  CHECK(MessageBits::from_integer(big, 130).to_integer() == big);
}
