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

#include "dnasynth/ecc.hpp"
#include "dnasynth/error.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace dnasynth;

namespace {

MessageBits
random_message(std::size_t k, std::mt19937_64& rng)
{
  std::vector<std::uint8_t> bits(k);
  for (auto& b : bits) {
    b = static_cast<std::uint8_t>(rng() & 1);
  }
  return MessageBits(std::move(bits));
}

const EccCodec&
codec48()
{
  static const EccCodec codec({ 48, 2, Epsilon(1, 10), 192 });
  return codec;
}

} // namespace

TEST_CASE("complement")
{
  CHECK(complement(Symbol::A) == Symbol::G);
  CHECK(complement(Symbol::T) == Symbol::C);
  for (int a = 1; a <= 4; ++a) {
    const auto s = static_cast<Symbol>(a);
    CHECK(complement(complement(s)) == s);
    CHECK(is_gc(s) != is_gc(complement(s)));
  }
  CHECK(ceil_log4(1) == 0);
  CHECK(ceil_log4(16) == 2);
  CHECK(ceil_log4(17) == 3);
  CHECK(ceil_log4(48) == 3);
}

TEST_CASE("derived parameters")
{
  const EccCodec& c = codec48();
  CHECK(c.digits() == 3);
  CHECK(c.parity_length() == 14);
  CHECK(c.data_length() == 34);
  CHECK(c.inner_budget() == 136);
  CHECK(c.inner().window().lo == 14);
  CHECK(c.inner().window().hi == 20);

  CHECK_THROWS_AS(EccCodec({ 48, 1, Epsilon(1, 10), 192 }), ParamError);
  CHECK_THROWS_AS(EccCodec({ 12, 2, Epsilon(1, 10), 48 }), ParamError);
  CHECK_THROWS_AS(EccCodec({ 48, 2, Epsilon(1, 10), 80 }), ParamError);
  // k1 = 11 is odd, so eps = 0 leaves no admissible GC-content.
  CHECK_THROWS_AS(EccCodec({ 25, 2, Epsilon(0, 1), 100 }), ParamError);
}

TEST_CASE("parity layout")
{
  const EccCodec codec({ 24, 2, Epsilon(1, 4), 96 });
  REQUIRE(codec.data_length() == 10);
  const DnaSeq data = parse_dna("ACATCGACGA");
  const DnaSeq p = codec.parity(data);
  REQUIRE(p.size() == 14);
  // alpha = A: alpha' = C, f(alpha') = T, beta = A, f(beta) = G.
  const std::vector<Symbol> head(p.view().begin(), p.view().begin() + 6);
  CHECK(head == std::vector<Symbol>{ Symbol::C, Symbol::C, Symbol::T, Symbol::T, Symbol::A, Symbol::G });
  const Syndromes syn = compute_syndromes(data, 24);
  const auto tau = digits_base4(syn.a, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(p[6 + 2 * i] == tau[i]);
    CHECK(p[7 + 2 * i] == complement(tau[i]));
  }
  CHECK(p[12] == syn.b);
  CHECK(p[13] == complement(syn.b));
  CHECK(gc_content(p) == codec.digits() + 4);

  // f(alpha') = A forces beta = T.
  const DnaSeq p2 = codec.parity(parse_dna("ACATCGACGT"));
  CHECK(p2[0] == Symbol::G);
  CHECK(p2[4] == Symbol::T);
  CHECK_THROWS_AS(codec.parity(parse_dna("ACG")), ParamError);
}

TEST_CASE("random codewords satisfy the constraints")
{
  const EccCodec& codec = codec48();
  std::mt19937_64 rng(7);
  const auto& inner = codec.inner().window();
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_message(codec.message_bits(), rng);
    const DnaSeq c = codec.encode(m);
    REQUIRE(c.size() == 48);
    CHECK(is_rll(c, 2));
    CHECK(synthesis_time(c) <= 192);
    const DnaSeq p(c.view().subspan(34));
    CHECK(gc_content(p) == 7);
    CHECK(gc_content(c) >= inner.lo + 7);
    CHECK(gc_content(c) <= inner.hi + 7);
  }
}

TEST_CASE("single indels are corrected")
{
  const EccCodec& codec = codec48();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto m = random_message(codec.message_bits(), rng);
    const DnaSeq c = codec.encode(m);
    CHECK(codec.decode(c) == m);
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
      DnaSeq y(c.view().first(pos));
      y.append(c.view().subspan(pos + 1));
      CHECK(codec.decode(y) == m);
    }
    for (std::size_t pos = 0; pos <= c.size(); ++pos) {
      for (int s = 1; s <= 4; ++s) {
        DnaSeq y(c.view().first(pos));
        y.push_back(static_cast<Symbol>(s));
        y.append(c.view().subspan(pos));
        CHECK(codec.decode(y) == m);
      }
    }
  }
}

TEST_CASE("decode errors")
{
  const EccCodec& codec = codec48();
  CHECK_THROWS_AS(codec.decode(DnaSeq(std::vector<Symbol>(46, Symbol::A))), RangeError);
  CHECK_THROWS_AS(codec.decode(DnaSeq(std::vector<Symbol>(50, Symbol::A))), RangeError);
  // An unconstrained data block is not a codeword of the inner code.
  CHECK_THROWS_AS(codec.decode(DnaSeq(std::vector<Symbol>(48, Symbol::A))), UncorrectableError);
}

TEST_CASE("indel ball")
{
  // The empty word plus AA, AT, AC, AG, TA, CA, GA.
  CHECK(indel_ball(DnaSeq{ 1 }).size() == 8);
  const auto ball = indel_ball(DnaSeq{ 2, 2 });
  CHECK(std::count(ball.begin(), ball.end(), DnaSeq{ 2 }) == 1);
  CHECK(std::count_if(ball.begin(), ball.end(), [](const DnaSeq& y) { return y.size() == 1; }) == 1);
  // Insertions: TTT, three xTT, three TxT, three TTx.
  CHECK(ball.size() == 1 + 10);
  const DnaSeq x{ 1, 3, 3, 2 };
  for (const auto& y : indel_ball(x)) {
    if (y.size() == x.size() + 1) {
      const auto back = indel_ball(y);
      CHECK(std::binary_search(back.begin(), back.end(), x));
    }
  }
}
