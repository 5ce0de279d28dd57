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
#include "dnasynth/dna.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace dnasynth {

/// Runs of length <= ell indexed in the code's run order: length-major,
/// symbol-minor. Iterating indices 0, 1, ... visits runs in increasing order.
inline constexpr int
run_index(const Run& r) noexcept
{
  return (r.len - 1) * 4 + (value(r.symbol) - 1);
}

inline constexpr Run
run_at(int index) noexcept
{
  return { static_cast<Symbol>(index % 4 + 1), index / 4 + 1 };
}

/// Fewest template cycles a run can cost when it starts the sequence.
inline constexpr long long
leading_run_cost(const Run& r) noexcept
{
  return 4LL * (r.len - 1) + value(r.symbol);
}

/// Budget left for the prefix when run `last` is preceded by a run ending in
/// `prev`: T - 4(|s| - 1) - ((e(s) - e(s')) mod 4).
inline constexpr long long
prefix_budget(long long budget, const Run& last, Symbol prev) noexcept
{
  return budget - 4LL * (last.len - 1) - value(shifted_mod4(value(last.symbol) - value(prev)));
}

enum class Execution
{
  serial,
  parallel,
};

namespace detail {

/// Write-once table of N(n, s, [m,] T) for 1 <= n <= max_n, all runs of
/// length <= ell, 0 <= m <= n, 0 <= T <= 4n. Filled bottom-up, one length
/// layer at a time; cells of a layer only read shorter layers.
class LayeredCounts
{
public:
  LayeredCounts(int max_n, int ell, bool track_gc, Execution policy);

  int max_n() const noexcept { return max_n_; }
  int ell() const noexcept { return ell_; }

  /// Out-of-domain arguments (n < 1, negative budget, gc outside [0, n])
  /// read as zero; budgets above 4n are clamped to 4n.
  const BigCount& at(int n, int run_idx, int gc, long long budget) const;

  std::size_t cell_count() const noexcept;

private:
  std::size_t gc_dim(int n) const noexcept { return track_gc_ ? static_cast<std::size_t>(n) + 1 : 1; }
  std::size_t index(int n, int run_idx, int gc, int budget) const noexcept;
  BigCount compute(int n, int run_idx, int gc, int budget) const;
  void fill_layer(int n, Execution policy);

  int max_n_;
  int ell_;
  bool track_gc_;
  std::vector<std::vector<BigCount>> layers_;
};

} // namespace detail

/// N(n, s, T): sequences of length n with ell-RLL, last run s and synthesis
/// time at most T.
class RllCountTable
{
public:
  RllCountTable(int max_n, int ell, Execution policy = Execution::parallel);

  int max_n() const noexcept { return counts_.max_n(); }
  int ell() const noexcept { return counts_.ell(); }

  /// Throws ConstraintError if last.len exceeds ell, ParamError if n > max_n.
  const BigCount& count(int n, const Run& last, long long budget) const;

  /// Indexed form without validation, for the codec walks.
  const BigCount& count_at(int n, int run_idx, long long budget) const
  {
    return counts_.at(n, run_idx, 0, budget);
  }

  /// |C(n, ell, T)|, the sum over every last run.
  BigCount total(int n, long long budget) const;

private:
  detail::LayeredCounts counts_;
};

/// N(n, s, m, T): as RllCountTable with GC-content exactly m.
class BalancedCountTable
{
public:
  BalancedCountTable(int max_n, int ell, Execution policy = Execution::parallel);

  int max_n() const noexcept { return counts_.max_n(); }
  int ell() const noexcept { return counts_.ell(); }

  const BigCount& count(int n, const Run& last, int gc, long long budget) const;

  const BigCount& count_at(int n, int run_idx, int gc, long long budget) const
  {
    return counts_.at(n, run_idx, gc, budget);
  }

  /// Sum over last runs at a fixed GC-content.
  BigCount total_with_gc(int n, int gc, long long budget) const;

  /// |C(n, ell, eps, T)|, the sum over every last run and every m in the
  /// GC window of n.
  BigCount total(int n, const Epsilon& eps, long long budget) const;

private:
  detail::LayeredCounts counts_;
};

// One-shot helpers that size a fresh table for the query.
BigCount
count_rll(int n, const Run& last, long long budget, int ell);

BigCount
count_rll_total(int n, int ell, long long budget);

BigCount
count_balanced(int n, const Run& last, int gc, long long budget, int ell);

BigCount
count_balanced_total(int n, int ell, const Epsilon& eps, long long budget);

namespace reference {

/// Top-down memoized evaluation of the counting recursions, literally as
/// stated (no budget clamping, no layer order). Slow; used to cross-check
/// the layered tables.
class RecursiveCounter
{
public:
  explicit RecursiveCounter(int ell);

  BigCount rll(int n, const Run& last, long long budget);
  BigCount balanced(int n, const Run& last, int gc, long long budget);

private:
  int ell_;
  std::map<std::tuple<int, int, long long>, BigCount> rll_memo_;
  std::map<std::tuple<int, int, int, long long>, BigCount> balanced_memo_;
};

} // namespace reference

} // namespace dnasynth
