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

// Brute-force ground truth. Nothing here uses the counting tables or the
// rank/unrank walks: sets come from scanning every word of the space and
// applying the dna-core predicates directly.

#include "dnasynth/counting.hpp"
#include "dnasynth/dna.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dnasynth::oracle {

/// Largest length the oracle will enumerate.
inline constexpr int kMaxLength = 14;

struct EnumerationSpec
{
  int n = 0;
  int ell = 1;
  std::optional<Epsilon> epsilon; ///< absent: RLL-only code
  long long budget = 0;

  std::string str() const;
};

/// Budgets {n, ceil(1.5n), ceil(2.5n), 4n}, duplicates removed.
std::vector<long long>
budget_grid(int n);

/// Every spec with 1 <= n <= max_n, ell in 1..4, T in budget_grid(n) and
/// eps in {none, 0, 1/20, 1/4, 1/2}.
std::vector<EnumerationSpec>
exhaustive_grid(int max_n);

/// Membership in the spec's constrained set, straight from the predicates.
bool
satisfies(const EnumerationSpec& spec, std::span<const Symbol> c);

/// The i-th word of Sigma_4^n in base-4 order (first symbol most significant).
DnaSeq
word_at(int n, std::uint64_t index);

using SeqLess = bool (*)(std::span<const Symbol>, std::span<const Symbol>);

/// seq_less for RLL-only specs, balanced_seq_less otherwise.
SeqLess
code_order(const EnumerationSpec& spec);

/// Every member of the spec's set, sorted with `less` (the code order by
/// default). Throws ParamError for n > kMaxLength. n == 0 yields one empty
/// word.
std::vector<DnaSeq>
enumerate_sorted(const EnumerationSpec& spec);
std::vector<DnaSeq>
enumerate_sorted(const EnumerationSpec& spec, SeqLess less);

/// Histogram of every word of Sigma_4^n by (longest run, synthesis time,
/// GC-content). Answers count queries for any (ell, eps, T) at that n.
class Census
{
public:
  explicit Census(int n, Execution policy = Execution::parallel);

  int length() const noexcept { return n_; }
  std::uint64_t count(int ell, const std::optional<Epsilon>& eps, long long budget) const;
  std::uint64_t total() const noexcept;

  friend bool operator==(const Census&, const Census&) = default;

private:
  std::size_t slot(int run, int time, int gc) const noexcept;

  int n_;
  std::vector<std::uint64_t> hist_;
};

struct CodecReport
{
  bool ok = true;
  std::uint64_t checked = 0;
  std::string divergence; ///< first failure, empty when ok

  std::string str() const { return ok ? "ok" : divergence; }
};

/// Checks the enumerative codec for the spec against the sorted brute-force
/// list: sizes agree, the list is strictly increasing under `less`,
/// unrank(i) == list[i-1], rank inverts it, and every word satisfies the
/// spec.
CodecReport
check_codec(const EnumerationSpec& spec);
CodecReport
check_codec(const EnumerationSpec& spec, SeqLess less);

struct BallReport
{
  bool ok = true;
  std::size_t first = 0;  ///< indices of an intersecting pair when !ok
  std::size_t second = 0;
  DnaSeq witness;         ///< a word in both balls

  std::string str() const;
};

/// Pairwise disjointness of single-indel balls over a codebook. Works by
/// bucketing every ball element and looking for a word reached from two
/// different codewords; duplicated codewords are reported as intersecting.
BallReport
check_ball_disjointness(std::span<const DnaSeq> codewords);

} // namespace dnasynth::oracle
