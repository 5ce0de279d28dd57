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

#include "dnasynth/counting.hpp"
#include "dnasynth/error.hpp"
#include "dnasynth/oracle.hpp"

#include "doctest.h"

using namespace dnasynth;

namespace {

constexpr Run run(int sym, int len)
{
  return { static_cast<Symbol>(sym), len };
}

// Brute-force N(n, s, [m], T) straight from the predicates.
unsigned long
brute_count(int n, const Run& last, int gc, long long budget, int ell, bool track_gc)
{
  unsigned long hits = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{ 1 } << (2 * n)); ++i) {
    const DnaSeq c = oracle::word_at(n, i);
    if (!is_rll(c, ell) || synthesis_time(c) > budget) {
      continue;
    }
    if (track_gc && gc_content(c) != gc) {
      continue;
    }
    if (to_runs(c).back() == last) {
      ++hits;
    }
  }
  return hits;
}

} // namespace

TEST_CASE("run indexing is the run order")
{
  CHECK(run_index(run(1, 1)) == 0);
  CHECK(run_index(run(4, 1)) == 3);
  CHECK(run_index(run(1, 2)) == 4);
  for (int i = 0; i < 16; ++i) {
    CHECK(run_index(run_at(i)) == i);
  }
  CHECK(leading_run_cost(run(3, 2)) == 7);
  // Last run {T}^1 after an A: (2 - 1) mod 4 = 1 cycle.
  CHECK(prefix_budget(10, run(2, 1), Symbol::A) == 9);
  // Last run {A}^2 after a G: 4 + ((1 - 4) mod 4 = 1).
  CHECK(prefix_budget(10, run(1, 2), Symbol::G) == 5);
}

TEST_CASE("rll count examples")
{
  CHECK(count_rll(1, run(1, 1), 1, 1) == 1);
  CHECK(count_rll(1, run(1, 1), 0, 1) == 0);
  CHECK(count_rll(2, run(2, 1), 2, 2) == 1);
  CHECK(count_rll_total(2, 1, 8) == 12);
  CHECK(count_rll_total(2, 2, 8) == 16);
  CHECK(count_rll_total(1, 1, 4) == 4);
  CHECK_THROWS_AS(count_rll(3, run(1, 3), 12, 2), ConstraintError);
}

TEST_CASE("balanced count examples")
{
  CHECK(count_balanced(1, run(3, 1), 1, 3, 1) == 1);
  CHECK(count_balanced(1, run(3, 1), 0, 3, 1) == 0);
  const BalancedCountTable table(2, 2);
  CHECK(table.total_with_gc(2, 1, 8) == 8);
  CHECK(count_balanced_total(2, 2, Epsilon(0, 1), 8) == 8);
  CHECK(count_balanced_total(2, 2, Epsilon(1, 2), 8) == 16);
  CHECK(count_balanced_total(2, 1, Epsilon(0, 1), 8) == 8);
}

TEST_CASE("table lookups outside the domain read as zero")
{
  const RllCountTable table(4, 2);
  CHECK(table.count_at(0, 0, 10) == 0);
  CHECK(table.count_at(3, 0, -1) == 0);
  CHECK(table.count_at(3, 0, 1000) == table.count_at(3, 0, 12));
  CHECK_THROWS_AS(table.count(5, run(1, 1), 20), ParamError);
  const BalancedCountTable balanced(4, 2);
  CHECK(balanced.count_at(3, 0, 4, 12) == 0);
  CHECK(balanced.count_at(3, 0, -1, 12) == 0);
}

TEST_CASE("per-run counts match brute force")
{
  for (int ell = 1; ell <= 3; ++ell) {
    const RllCountTable rll(6, ell);
    const BalancedCountTable bal(6, ell);
    for (int n = 1; n <= 6; ++n) {
      for (const long long t : oracle::budget_grid(n)) {
        for (int r = 0; r < 4 * ell; ++r) {
          const Run s = run_at(r);
          CHECK(rll.count(n, s, t) == brute_count(n, s, 0, t, ell, false));
          for (int m = 0; m <= n; m += 2) {
            CHECK(bal.count(n, s, m, t) == brute_count(n, s, m, t, ell, true));
          }
        }
      }
    }
  }
}

TEST_CASE("totals match the census")
{
  for (int n = 1; n <= 8; ++n) {
    const oracle::Census census(n);
    for (int ell = 1; ell <= 4; ++ell) {
      const RllCountTable rll(n, ell);
      const BalancedCountTable bal(n, ell);
      for (const long long t : oracle::budget_grid(n)) {
        CHECK(rll.total(n, t) == census.count(ell, std::nullopt, t));
        for (const Epsilon eps : { Epsilon(0, 1), Epsilon(1, 20), Epsilon(1, 4), Epsilon(1, 2) }) {
          CHECK(bal.total(n, eps, t) == census.count(ell, eps, t));
        }
      }
    }
  }
}

TEST_CASE("serial, parallel and recursive evaluations agree")
{
  for (int ell = 1; ell <= 4; ++ell) {
    const RllCountTable par(9, ell, Execution::parallel);
    const RllCountTable ser(9, ell, Execution::serial);
    const BalancedCountTable bpar(9, ell, Execution::parallel);
    const BalancedCountTable bser(9, ell, Execution::serial);
    reference::RecursiveCounter rec(ell);
    for (int n = 1; n <= 9; ++n) {
      for (long long t = 0; t <= 4 * n + 2; ++t) {
        for (int r = 0; r < 4 * ell; ++r) {
          const Run s = run_at(r);
          const BigCount& value = par.count(n, s, t);
          CHECK(value == ser.count(n, s, t));
          CHECK(value == rec.rll(n, s, t));
          for (int m = 0; m <= n; ++m) {
            const BigCount& b = bpar.count(n, s, m, t);
            CHECK(b == bser.count(n, s, m, t));
            if (n <= 6) {
              CHECK(b == rec.balanced(n, s, m, t));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("summing over gc recovers the rll count")
{
  const RllCountTable rll(20, 3);
  const BalancedCountTable bal(20, 3);
  for (int n = 1; n <= 20; ++n) {
    for (const long long t : oracle::budget_grid(n)) {
      for (int r = 0; r < 12; ++r) {
        BigCount sum = 0;
        for (int m = 0; m <= n; ++m) {
          sum += bal.count_at(n, r, m, t);
        }
        CHECK(sum == rll.count_at(n, r, t));
      }
      CHECK(bal.total(n, Epsilon(1, 2), t) == rll.total(n, t));
    }
  }
}

TEST_CASE("counts are monotone in budget and ell")
{
  const RllCountTable two(16, 2);
  const RllCountTable three(16, 3);
  for (int n = 1; n <= 16; ++n) {
    for (long long t = 1; t <= 4 * n; ++t) {
      CHECK(two.total(n, t - 1) <= two.total(n, t));
      CHECK(two.total(n, t) <= three.total(n, t));
    }
    CHECK(two.total(n, n - 1) == 0);
    // Every symbol costs at least one cycle, so T = n admits only the
    // sequence that follows the template exactly: ATCGATCG...
    CHECK(two.total(n, n) == 1);
  }
}

TEST_CASE("large tables stay exact")
{
  const RllCountTable table(200, 3);
  // At T = 4n the budget never binds, so the total is the plain 3-RLL count:
  // the first run has 4 symbol choices, every later run 3.
  std::vector<BigCount> a(201);
  a[0] = 1;
  for (int n = 1; n <= 200; ++n) {
    BigCount sum = 0;
    for (int len = 1; len <= 3 && len <= n; ++len) {
      sum += a[static_cast<std::size_t>(n - len)] * (n - len == 0 ? 4 : 3);
    }
    a[static_cast<std::size_t>(n)] = sum;
  }
  for (int n = 1; n <= 200; n += 13) {
    CHECK(table.total(n, 4LL * n) == a[static_cast<std::size_t>(n)]);
  }
}
