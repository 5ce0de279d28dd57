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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnasynth::cli {

enum class CodeKind
{
  rll,
  balanced,
  ecc,
};

std::string_view
to_string(CodeKind kind) noexcept;

struct RateCell
{
  CodeKind kind = CodeKind::rll;
  int n = 0;
  int ell = 2;
  std::optional<Epsilon> epsilon; ///< absent for rll rows
  long long budget = 0;
};

struct RateRow
{
  RateCell cell;
  bool feasible = false;
  std::string note;         ///< why an infeasible row is empty
  BigCount count;           ///< N of the (inner) constrained code
  std::size_t k_bits = 0;
  long long redundancy_symbols = 0; ///< n - ceil(log4 N), plus parity for ecc
  int parity_overhead = 0;          ///< 2 ceil(log4 n) + 8 for ecc, else 0
  double measured_redundancy = 0;   ///< n - k_bits / 2
  double wall_time_ms = 0;
};

/// "small" or "full"; throws ParamError on any other name.
std::vector<RateCell>
rate_grid(std::string_view name);

/// Rows in grid order. Cells are evaluated in parallel; tables are built once
/// per (kind, ell) at the largest n of the grid and shared.
std::vector<RateRow>
evaluate_rates(const std::vector<RateCell>& cells);

} // namespace dnasynth::cli
