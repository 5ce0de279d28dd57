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

#include "dnasynth/vt.hpp"

#include "dnasynth/error.hpp"

#include <algorithm>
#include <optional>

namespace dnasynth {

std::vector<std::uint8_t>
signature(std::span<const Symbol> c)
{
  std::vector<std::uint8_t> s;
  if (c.size() < 2) {
    return s;
  }
  s.reserve(c.size() - 1);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    s.push_back(value(c[i + 1]) >= value(c[i]) ? 1 : 0);
  }
  return s;
}

long long
vt_syndrome(std::span<const std::uint8_t> x) noexcept
{
  long long sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += static_cast<long long>(i + 1) * x[i];
  }
  return sum;
}

namespace {

// Same result as compute_syndromes without materializing the signature.
Syndromes
syndromes_of(std::span<const Symbol> c, long long modulus) noexcept
{
  long long vt = 0;
  long long sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    sum += value(c[i]);
    if (i + 1 < c.size() && value(c[i + 1]) >= value(c[i])) {
      vt += static_cast<long long>(i + 1);
    }
  }
  return { ((vt % modulus) + modulus) % modulus, shifted_mod4(sum), modulus };
}

class CandidateSet
{
public:
  void offer(const std::vector<Symbol>& candidate, const Syndromes& syn)
  {
    if (syndromes_of(candidate, syn.modulus) != syn) {
      return;
    }
    if (!match_) {
      match_ = DnaSeq(candidate);
    } else if (!std::equal(match_->begin(), match_->end(), candidate.begin(), candidate.end())) {
      throw AmbiguousDecodeError("distinct words share the received word and syndromes");
    }
  }

  DnaSeq take()
  {
    if (!match_) {
      throw UncorrectableError("uncorrectable: no single indel explains the received word");
    }
    return std::move(*match_);
  }

private:
  std::optional<DnaSeq> match_;
};

} // namespace

Syndromes
compute_syndromes(std::span<const Symbol> data, long long modulus)
{
  if (modulus < 1) {
    throw ParamError("syndrome modulus must be positive");
  }
  const long long vt = vt_syndrome(signature(data));
  long long sum = 0;
  for (Symbol s : data) {
    sum += value(s);
  }
  return { vt % modulus, shifted_mod4(sum), modulus };
}

std::vector<Symbol>
digits_base4(long long a, int v)
{
  long long limit = 1;
  for (int i = 0; i < v; ++i) {
    limit *= 4;
  }
  if (v < 0 || a < 0 || a >= limit) {
    throw RangeError(std::to_string(a) + " does not fit in " + std::to_string(v) + " base-4 digits");
  }
  std::vector<Symbol> digits(static_cast<std::size_t>(v), Symbol::A);
  for (int i = v - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Symbol>(a % 4 + 1);
    a /= 4;
  }
  return digits;
}

long long
undigits_base4(std::span<const Symbol> digits) noexcept
{
  long long a = 0;
  for (Symbol d : digits) {
    a = 4 * a + (value(d) - 1);
  }
  return a;
}

DnaSeq
vt_decode_deletion(std::span<const Symbol> y, int k, const Syndromes& syn)
{
  if (k < 1 || y.size() + 1 != static_cast<std::size_t>(k)) {
    throw ParamError("deletion decode expects a word of length k - 1");
  }
  CandidateSet set;
  std::vector<Symbol> candidate(static_cast<std::size_t>(k));
  for (std::size_t pos = 0; pos < static_cast<std::size_t>(k); ++pos) {
    std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pos), candidate.begin());
    std::copy(y.begin() + static_cast<std::ptrdiff_t>(pos), y.end(),
              candidate.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    for (int a = 1; a <= 4; ++a) {
      candidate[pos] = static_cast<Symbol>(a);
      set.offer(candidate, syn);
    }
  }
  return set.take();
}

DnaSeq
vt_decode_insertion(std::span<const Symbol> y, int k, const Syndromes& syn)
{
  if (k < 1 || y.size() != static_cast<std::size_t>(k) + 1) {
    throw ParamError("insertion decode expects a word of length k + 1");
  }
  CandidateSet set;
  std::vector<Symbol> candidate(static_cast<std::size_t>(k));
  for (std::size_t pos = 0; pos < y.size(); ++pos) {
    // Deleting any symbol of a run gives the same word; try each run once.
    if (pos > 0 && y[pos] == y[pos - 1]) {
      continue;
    }
    std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pos), candidate.begin());
    std::copy(y.begin() + static_cast<std::ptrdiff_t>(pos) + 1, y.end(),
              candidate.begin() + static_cast<std::ptrdiff_t>(pos));
    set.offer(candidate, syn);
  }
  return set.take();
}

} // namespace dnasynth
