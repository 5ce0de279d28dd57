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
#include "dnasynth/error.hpp"
#include "dnasynth/oracle.hpp"

#include "doctest.h"

#include <set>

using namespace dnasynth;

TEST_CASE("pair order")
{
  CHECK(pair_less({ Symbol::G, 3 }, 1, { Symbol::A, 1 }, 2));
  CHECK(pair_less({ Symbol::A, 1 }, 2, { Symbol::A, 2 }, 2));
  CHECK_FALSE(pair_less({ Symbol::C, 2 }, 2, { Symbol::C, 2 }, 2));
}

TEST_CASE("gc-major sequence order")
{
  CHECK(balanced_seq_less(parse_dna("AA"), parse_dna("AC")));
  CHECK(balanced_seq_less(parse_dna("AC"), parse_dna("TC")));
  CHECK_FALSE(balanced_seq_less(parse_dna("GG"), parse_dna("AT")));
  CHECK_THROWS_AS(balanced_seq_less(parse_dna("A"), parse_dna("AT")), ParamError);
}

TEST_CASE("balanced pairs")
{
  const BalancedCodec codec(2, 2, Epsilon(0, 1), 8);
  CHECK(codec.size() == 8);
  CHECK(codec.message_bits() == 3);
  const auto list = oracle::enumerate_sorted({ 2, 2, Epsilon(0, 1), 8 });
  REQUIRE(list.size() == 8);
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(codec.unrank(static_cast<unsigned long>(i + 1)) == list[i]);
    CHECK(gc_content(list[i]) == 1);
  }
  CHECK_THROWS_AS(codec.rank(parse_dna("AA")), ConstraintError);
}

TEST_CASE("codec matches the oracle on a grid")
{
  for (int n = 1; n <= 7; ++n) {
    for (int ell = 1; ell <= 4; ++ell) {
      for (const long long t : oracle::budget_grid(n)) {
        for (const Epsilon eps : { Epsilon(0, 1), Epsilon(1, 20), Epsilon(1, 4), Epsilon(1, 2) }) {
          const oracle::EnumerationSpec spec{ n, ell, eps, t };
          const auto report = oracle::check_codec(spec);
          CHECK_MESSAGE(report.ok, spec.str() << ": " << report.str());
        }
      }
    }
  }
}

TEST_CASE("half balance gives the rll code as a set")
{
  for (int n = 1; n <= 8; ++n) {
    const long long t = (5 * n + 1) / 2;
    const BalancedCodec bal(n, 2, Epsilon(1, 2), t);
    const RllCodec rll(n, 2, t);
    REQUIRE(bal.size() == rll.size());
    std::set<DnaSeq> a;
    std::set<DnaSeq> b;
    for (unsigned long m = 1; m <= bal.size(); ++m) {
      a.insert(bal.unrank(m));
      b.insert(rll.unrank(m));
    }
    CHECK(a == b);
  }
}

TEST_CASE("message round trip and constraints")
{
  for (int n = 1; n <= 8; ++n) {
    for (const Epsilon eps : { Epsilon(0, 1), Epsilon(1, 4) }) {
      const BalancedCodec codec(n, 2, eps, 3 * n);
      if (codec.size() == 0) {
        continue;
      }
      const std::size_t k = codec.message_bits();
      for (unsigned long x = 0; x < (1UL << k); ++x) {
        const auto m = MessageBits::from_integer(x, k);
        const DnaSeq c = codec.encode(m);
        CHECK(is_rll(c, 2));
        CHECK(is_balanced(c, eps));
        CHECK(synthesis_time(c) <= 3 * n);
        CHECK(codec.decode(c) == m);
      }
    }
  }
}

TEST_CASE("odd length with zero slack is empty")
{
  const BalancedCodec codec(5, 2, Epsilon(0, 1), 20);
  CHECK(codec.size() == 0);
  CHECK_THROWS_AS(codec.message_bits(), ParamError);
}

TEST_CASE("large balanced code round trips at the extremes")
{
  const BalancedCodec codec(100, 3, Epsilon(1, 10), 250);
  REQUIRE(codec.size() > 0);
  for (const BigCount& m : std::vector<BigCount>{ 1, codec.size() / 2, codec.size() }) {
    const DnaSeq c = codec.unrank(m);
    CHECK(is_balanced(c, Epsilon(1, 10)));
    CHECK(codec.rank(c) == m);
  }
}
