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
#include "dnasynth/error.hpp"
#include "dnasynth/oracle.hpp"

#include "doctest.h"

#include <set>

using namespace dnasynth;

TEST_CASE("run order")
{
  CHECK(run_less({ Symbol::A, 1 }, { Symbol::G, 1 }));
  CHECK(run_less({ Symbol::G, 1 }, { Symbol::A, 2 }));
  CHECK_FALSE(run_less({ Symbol::T, 3 }, { Symbol::T, 3 }));
}

TEST_CASE("sequence order")
{
  CHECK(seq_less(parse_dna("AT"), parse_dna("AG")));
  CHECK(seq_less(parse_dna("TA"), parse_dna("AA")));
  CHECK_FALSE(seq_less(parse_dna("AT"), parse_dna("AT")));
  // Equal last runs defer to the prefix.
  CHECK(seq_less(parse_dna("AGT"), parse_dna("TGT")));
  CHECK_THROWS_AS(seq_less(parse_dna("A"), parse_dna("AT")), ParamError);
}

TEST_CASE("sequence order is a strict total order on short words")
{
  std::vector<DnaSeq> words;
  for (std::uint64_t i = 0; i < 256; ++i) {
    words.push_back(oracle::word_at(4, i));
  }
  for (const auto& a : words) {
    CHECK_FALSE(seq_less(a, a));
    for (const auto& b : words) {
      if (a != b) {
        CHECK(seq_less(a, b) != seq_less(b, a));
      }
    }
  }
}

TEST_CASE("unrank and rank examples")
{
  const RllCodec codec(1, 1, 4);
  CHECK(codec.size() == 4);
  CHECK(codec.unrank(1) == parse_dna("A"));
  CHECK(codec.unrank(4) == parse_dna("G"));
  CHECK(codec.rank(parse_dna("A")) == 1);
  CHECK_THROWS_AS(codec.unrank(0), RangeError);
  CHECK_THROWS_AS(codec.unrank(5), RangeError);

  const RllCodec pairs(2, 1, 8);
  CHECK_THROWS_AS(pairs.rank(parse_dna("AA")), ConstraintError);
  CHECK_THROWS_AS(pairs.rank(parse_dna("A")), ConstraintError);
  const RllCodec tight(2, 2, 4);
  CHECK_THROWS_AS(tight.rank(parse_dna("GA")), ConstraintError);
}

TEST_CASE("rank over the full enumeration is the identity")
{
  const oracle::EnumerationSpec spec{ 4, 2, std::nullopt, 10 };
  const auto list = oracle::enumerate_sorted(spec);
  const RllCodec codec(4, 2, 10);
  REQUIRE(codec.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(codec.rank(list[i]) == static_cast<unsigned long>(i + 1));
  }
}

TEST_CASE("codec matches the oracle on a grid")
{
  for (int n = 1; n <= 7; ++n) {
    for (int ell = 1; ell <= 4; ++ell) {
      for (const long long t : oracle::budget_grid(n)) {
        const oracle::EnumerationSpec spec{ n, ell, std::nullopt, t };
        const auto report = oracle::check_codec(spec);
        CHECK_MESSAGE(report.ok, spec.str() << ": " << report.str());
      }
    }
  }
  const auto report = oracle::check_codec({ 10, 3, std::nullopt, 25 });
  CHECK_MESSAGE(report.ok, report.str());
}

TEST_CASE("message encoding")
{
  const RllCodec small(2, 2, 8);
  CHECK(small.message_bits() == 4);
  CHECK(small.encode(MessageBits::from_binary("0000")) == small.unrank(1));
  CHECK_THROWS_AS(small.encode(MessageBits::from_binary("000")), RangeError);

  const RllCodec pairs(2, 1, 8);
  CHECK(pairs.size() == 12);
  CHECK(pairs.message_bits() == 3);
  std::set<DnaSeq> seen;
  for (unsigned long x = 0; x < 8; ++x) {
    const DnaSeq c = pairs.encode(MessageBits::from_integer(x, 3));
    CHECK(is_rll(c, 1));
    seen.insert(c);
  }
  CHECK(seen.size() == 8);

  for (int n = 1; n <= 8; ++n) {
    const RllCodec codec(n, 2, 3 * n);
    const std::size_t k = codec.message_bits();
    for (unsigned long x = 0; x < (1UL << k); ++x) {
      const auto m = MessageBits::from_integer(x, k);
      const DnaSeq c = codec.encode(m);
      CHECK(synthesis_time(c) <= 3 * n);
      CHECK(codec.decode(c) == m);
    }
  }
}

TEST_CASE("empty codes are constructible but cannot carry messages")
{
  const RllCodec codec(5, 2, 4);
  CHECK(codec.size() == 0);
  CHECK_THROWS_AS(codec.message_bits(), ParamError);
  CHECK_THROWS_AS(RllCodec(0, 2, 4), ParamError);
}

TEST_CASE("a shared table serves shorter codes")
{
  const auto table = std::make_shared<const RllCountTable>(30, 2);
  const RllCodec a(30, 2, 75, table);
  const RllCodec b(12, 2, 30, table);
  CHECK(b.size() == RllCodec(12, 2, 30).size());
  CHECK_THROWS_AS(RllCodec(31, 2, 75, table), ParamError);
  CHECK_THROWS_AS(RllCodec(10, 3, 75, table), ParamError);

  // Top and bottom ranks at a size where the counts exceed 64 bits.
  const RllCodec big(120, 3, 300);
  CHECK(big.rank(big.unrank(1)) == 1);
  CHECK(big.rank(big.unrank(big.size())) == big.size());
  const BigCount mid = big.size() / 3;
  CHECK(big.rank(big.unrank(mid)) == mid);
  (void)a;
}
