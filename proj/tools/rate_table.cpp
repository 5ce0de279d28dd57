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

#include "rate_table.hpp"

#include "dnasynth/codec_balanced.hpp"
#include "dnasynth/codec_rll.hpp"
#include "dnasynth/counting.hpp"
#include "dnasynth/ecc.hpp"
#include "dnasynth/error.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>

namespace dnasynth::cli {

std::string_view
to_string(CodeKind kind) noexcept
{
  switch (kind) {
    case CodeKind::rll:
      return "rll";
    case CodeKind::balanced:
      return "balanced";
    case CodeKind::ecc:
      return "ecc";
  }
  return "?";
}

namespace {

struct GridAxes
{
  std::vector<int> lengths;
  std::vector<int> ells;
  std::vector<Epsilon> epsilons;
  std::vector<std::pair<int, int>> budget_ratios; ///< T = ceil(n * p / q)
};

long long
ceil_ratio(int n, std::pair<int, int> r)
{
  return (static_cast<long long>(n) * r.first + r.second - 1) / r.second;
}

std::vector<RateCell>
expand(const GridAxes& axes)
{
  std::vector<RateCell> cells;
  for (int n : axes.lengths) {
    for (int ell : axes.ells) {
      for (auto ratio : axes.budget_ratios) {
        const long long t = ceil_ratio(n, ratio);
        cells.push_back({ CodeKind::rll, n, ell, std::nullopt, t });
        for (const auto& eps : axes.epsilons) {
          cells.push_back({ CodeKind::balanced, n, ell, eps, t });
        }
        if (ell >= 2) {
          for (const auto& eps : axes.epsilons) {
            cells.push_back({ CodeKind::ecc, n, ell, eps, t });
          }
        }
      }
    }
  }
  return cells;
}

long long
symbol_redundancy(int n, const BigCount& count)
{
  return n - static_cast<long long>(ceil_log4(count));
}

class Tables
{
public:
  explicit Tables(const std::vector<RateCell>& cells)
  {
    for (const auto& c : cells) {
      int& need = c.kind == CodeKind::rll ? rll_need_[c.ell] : balanced_need_[c.ell];
      need = std::max(need, c.n);
    }
    for (auto [ell, n] : rll_need_) {
      rll_[ell] = std::make_shared<const RllCountTable>(n, ell);
    }
    for (auto [ell, n] : balanced_need_) {
      balanced_[ell] = std::make_shared<const BalancedCountTable>(n, ell);
    }
  }

  std::shared_ptr<const RllCountTable> rll(int ell) const { return rll_.at(ell); }
  std::shared_ptr<const BalancedCountTable> balanced(int ell) const { return balanced_.at(ell); }

private:
  std::map<int, int> rll_need_;
  std::map<int, int> balanced_need_;
  std::map<int, std::shared_ptr<const RllCountTable>> rll_;
  std::map<int, std::shared_ptr<const BalancedCountTable>> balanced_;
};

RateRow
evaluate(const RateCell& cell, const Tables& tables)
{
  const auto start = std::chrono::steady_clock::now();
  RateRow row;
  row.cell = cell;
  try {
    int payload_length = cell.n;
    switch (cell.kind) {
      case CodeKind::rll:
        row.count = RllCodec(cell.n, cell.ell, cell.budget, tables.rll(cell.ell)).size();
        break;
      case CodeKind::balanced:
        row.count =
          BalancedCodec(cell.n, cell.ell, *cell.epsilon, cell.budget, tables.balanced(cell.ell)).size();
        break;
      case CodeKind::ecc: {
        const EccCodec codec({ cell.n, cell.ell, *cell.epsilon, cell.budget }, tables.balanced(cell.ell));
        row.count = codec.inner().size();
        row.parity_overhead = codec.parity_length();
        payload_length = codec.data_length();
        break;
      }
    }
    if (sgn(row.count) == 0) {
      row.note = "constraints admit no sequence";
    } else {
      row.feasible = true;
      row.k_bits = floor_log2(row.count);
      row.redundancy_symbols = symbol_redundancy(payload_length, row.count) + row.parity_overhead;
      row.measured_redundancy = cell.n - static_cast<double>(row.k_bits) / 2;
    }
  } catch (const ParamError& e) {
    row.note = e.what();
  }
  row.wall_time_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

} // namespace

std::vector<RateCell>
rate_grid(std::string_view name)
{
  if (name == "small") {
    return expand({ { 16, 24, 48 }, { 2, 3 }, { Epsilon(1, 10), Epsilon(1, 4) }, { { 5, 2 }, { 4, 1 } } });
  }
  if (name == "full") {
    return expand({ { 8, 16, 24, 32, 48, 64 },
                    { 1, 2, 3, 4 },
                    { Epsilon(0, 1), Epsilon(1, 20), Epsilon(1, 10), Epsilon(1, 4), Epsilon(1, 2) },
                    { { 3, 2 }, { 5, 2 }, { 3, 1 }, { 4, 1 } } });
  }
  throw ParamError("unknown grid '" + std::string(name) + "' (expected small or full)");
}

std::vector<RateRow>
evaluate_rates(const std::vector<RateCell>& cells)
{
  const Tables tables(cells);
  std::vector<RateRow> rows(cells.size());
  const long long size = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < size; ++i) {
    rows[static_cast<std::size_t>(i)] = evaluate(cells[static_cast<std::size_t>(i)], tables);
  }
  return rows;
}

} // namespace dnasynth::cli
