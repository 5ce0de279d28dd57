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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnasynth {

/// Quaternary symbol, stored 1-based: A=1, T=2, C=3, G=4. The numeric
/// values are the machine's cycle offsets in the ATCG template.
enum class Symbol : std::uint8_t
{
  A = 1,
  T = 2,
  C = 3,
  G = 4,
};

inline constexpr int
value(Symbol s) noexcept
{
  return static_cast<int>(s);
}

/// Throws ParamError unless v is in [1, 4].
Symbol
symbol_from_int(int v);

/// ((x - 1) mod 4) + 1 with a nonnegative remainder, i.e. the residue of x
/// taken in {1, 2, 3, 4}.
inline constexpr Symbol
shifted_mod4(long long x) noexcept
{
  return static_cast<Symbol>(((x - 1) % 4 + 4) % 4 + 1);
}

inline constexpr bool
is_gc(Symbol s) noexcept
{
  return value(s) > 2;
}

char
to_char(Symbol s) noexcept;

/// A maximal block of `len` copies of `symbol`.
struct Run
{
  Symbol symbol = Symbol::A;
  int len = 1;

  friend bool operator==(const Run&, const Run&) = default;
};

inline constexpr int
gc_content(const Run& r) noexcept
{
  return is_gc(r.symbol) ? r.len : 0;
}

/// Fixed-length quaternary sequence. The empty sequence is a legal value.
/// `operator<=>` is plain lexicographic order on symbol values (for use as a
/// container key); the code order lives in the codec headers.
class DnaSeq
{
public:
  DnaSeq() = default;
  explicit DnaSeq(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols))
  {
  }
  /// Numeric form, each value validated to lie in [1, 4].
  DnaSeq(std::initializer_list<int> values);
  explicit DnaSeq(std::span<const Symbol> symbols)
    : symbols_(symbols.begin(), symbols.end())
  {
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::span<const Symbol> view() const noexcept { return symbols_; }
  operator std::span<const Symbol>() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(const Run& r) { symbols_.insert(symbols_.end(), r.len, r.symbol); }
  void append(std::span<const Symbol> s) { symbols_.insert(symbols_.end(), s.begin(), s.end()); }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  friend bool operator==(const DnaSeq&, const DnaSeq&) = default;
  friend auto operator<=>(const DnaSeq&, const DnaSeq&) = default;

private:
  std::vector<Symbol> symbols_;
};

std::vector<Run>
to_runs(std::span<const Symbol> c);

DnaSeq
from_runs(std::span<const Run> runs);

/// Differential sequence: d1 = c1, di = shifted_mod4(ci - c(i-1)).
/// Throws ConstraintError on empty input.
std::vector<Symbol>
diff_seq(std::span<const Symbol> c);

/// Inverse of diff_seq: ci = shifted_mod4(d1 + ... + di).
DnaSeq
integrate_diff(std::span<const Symbol> d);

/// Number of template cycles consumed to synthesize c on the cyclic ATCG
/// machine, i.e. the sum of the differential sequence. Throws on empty input.
long long
synthesis_time(std::span<const Symbol> c);

/// Count of C/G symbols.
int
gc_content(std::span<const Symbol> c) noexcept;

/// Longest run; 0 for the empty sequence.
int
max_run_length(std::span<const Symbol> c) noexcept;

/// Exact rational in [0, 1/2], the allowed deviation of the GC fraction.
class Epsilon
{
public:
  Epsilon() = default;
  /// Throws ParamError unless 0 <= num/den <= 1/2 and den > 0.
  Epsilon(long long num, long long den);

  /// Accepts "p/q", an integer, or a plain decimal such as "0.05".
  static Epsilon parse(std::string_view text);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  double as_double() const noexcept { return static_cast<double>(num_) / den_; }
  /// Reduced "p/q" form.
  std::string str() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Closed interval [lo, hi] of admissible GC-contents; empty when lo > hi.
struct GcWindow
{
  int lo = 0;
  int hi = -1;

  bool empty() const noexcept { return lo > hi; }
  bool contains(int g) const noexcept { return lo <= g && g <= hi; }
};

/// [ceil((1/2 - eps) n), floor((1/2 + eps) n)], computed without rounding.
GcWindow
gc_window(int n, const Epsilon& eps);

bool
is_rll(std::span<const Symbol> c, int ell) noexcept;

bool
is_balanced(std::span<const Symbol> c, const Epsilon& eps);

/// Uppercase ACGT only; throws ParseError carrying the offending offset.
DnaSeq
parse_dna(std::string_view text);

std::string
format_dna(std::span<const Symbol> c);

} // namespace dnasynth
