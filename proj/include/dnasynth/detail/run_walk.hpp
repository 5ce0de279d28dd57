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

// Shared bucket walk behind both enumerative codecs. Within a bucket whose
// last run is fixed, prefixes are visited by their own last run (in run
// order), each carrying the budget left after paying for the fixed run. The
// GC-content is pinned one level down by subtracting the run's contribution.

#include "dnasynth/bits.hpp"
#include "dnasynth/counting.hpp"
#include "dnasynth/dna.hpp"
#include "dnasynth/error.hpp"

#include <algorithm>
#include <vector>

namespace dnasynth::detail {

// CountFn: (int n, int run_idx, int gc, long long budget) -> const BigCount&
template <class CountFn>
DnaSeq
unrank_with_last(BigCount remaining, int n, int last_idx, int gc, long long budget, int ell,
                 bool track_gc, const CountFn& count)
{
  std::vector<Run> runs;
  Run last = run_at(last_idx);
  runs.push_back(last);
  while (n > last.len) {
    const int rest = n - last.len;
    const int rest_gc = track_gc ? gc - gc_content(last) : 0;
    bool found = false;
    for (int prev = 0; prev < 4 * ell; ++prev) {
      const Run candidate = run_at(prev);
      if (candidate.symbol == last.symbol) {
        continue;
      }
      const long long prev_budget = prefix_budget(budget, last, candidate.symbol);
      const BigCount& bucket = count(rest, prev, rest_gc, prev_budget);
      if (remaining <= bucket) {
        n = rest;
        gc = rest_gc;
        budget = prev_budget;
        last = candidate;
        found = true;
        break;
      }
      remaining -= bucket;
    }
    if (!found) {
      throw RangeError("rank exceeds bucket size during unranking");
    }
    runs.push_back(last);
  }
  std::reverse(runs.begin(), runs.end());
  return from_runs(runs);
}

// Rank of c within its last-run bucket, 1-based. `runs` is to_runs(c).
template <class CountFn>
BigCount
rank_with_last(const std::vector<Run>& runs, int n, int gc, long long budget, bool track_gc,
               const CountFn& count)
{
  BigCount acc = 1;
  for (std::size_t i = runs.size() - 1; i > 0; --i) {
    const Run& last = runs[i];
    const Run& prev = runs[i - 1];
    const int rest = n - last.len;
    const int rest_gc = track_gc ? gc - gc_content(last) : 0;
    for (int r = 0; r < run_index(prev); ++r) {
      const Run candidate = run_at(r);
      if (candidate.symbol != last.symbol) {
        acc += count(rest, r, rest_gc, prefix_budget(budget, last, candidate.symbol));
      }
    }
    budget = prefix_budget(budget, last, prev.symbol);
    n = rest;
    gc = rest_gc;
  }
  return acc;
}

} // namespace dnasynth::detail
