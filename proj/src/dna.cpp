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

#include "dnasynth/dna.hpp"

#include "dnasynth/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace dnasynth {

Symbol
symbol_from_int(int v)
{
  if (v < 1 || v > 4) {
    throw ParamError("symbol value " + std::to_string(v) + " outside [1, 4]");
  }
  return static_cast<Symbol>(v);
}

char
to_char(Symbol s) noexcept
{
  switch (s) {
    case Symbol::A:
      return 'A';
    case Symbol::T:
      return 'T';
    case Symbol::C:
      return 'C';
    case Symbol::G:
      return 'G';
  }
  return '?';
}

DnaSeq::DnaSeq(std::initializer_list<int> values)
{
  symbols_.reserve(values.size());
  for (int v : values) {
    symbols_.push_back(symbol_from_int(v));
  }
}

std::vector<Run>
to_runs(std::span<const Symbol> c)
{
  std::vector<Run> runs;
  for (Symbol s : c) {
    if (!runs.empty() && runs.back().symbol == s) {
      ++runs.back().len;
    } else {
      runs.push_back({ s, 1 });
    }
  }
  return runs;
}

DnaSeq
from_runs(std::span<const Run> runs)
{
  DnaSeq out;
  for (const Run& r : runs) {
    out.append(r);
  }
  return out;
}

std::vector<Symbol>
diff_seq(std::span<const Symbol> c)
{
  if (c.empty()) {
    throw ConstraintError("empty sequence");
  }
  std::vector<Symbol> d;
  d.reserve(c.size());
  d.push_back(c[0]);
  for (std::size_t i = 1; i < c.size(); ++i) {
    d.push_back(shifted_mod4(value(c[i]) - value(c[i - 1])));
  }
  return d;
}

DnaSeq
integrate_diff(std::span<const Symbol> d)
{
  DnaSeq c;
  c.reserve(d.size());
  long long acc = 0;
  for (Symbol s : d) {
    acc += value(s);
    c.push_back(shifted_mod4(acc));
  }
  return c;
}

long long
synthesis_time(std::span<const Symbol> c)
{
  if (c.empty()) {
    throw ConstraintError("empty sequence");
  }
  long long t = value(c[0]);
  for (std::size_t i = 1; i < c.size(); ++i) {
    t += value(shifted_mod4(value(c[i]) - value(c[i - 1])));
  }
  return t;
}

int
gc_content(std::span<const Symbol> c) noexcept
{
  return static_cast<int>(std::count_if(c.begin(), c.end(), is_gc));
}

int
max_run_length(std::span<const Symbol> c) noexcept
{
  int best = 0;
  int cur = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    cur = (i > 0 && c[i] == c[i - 1]) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

Epsilon::Epsilon(long long num, long long den)
{
  if (den <= 0 || num < 0 || 2 * num > den) {
    throw ParamError("epsilon " + std::to_string(num) + "/" + std::to_string(den) +
                     " outside [0, 1/2]");
  }
  const long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

long long
parse_nonneg(std::string_view text, std::size_t base_offset)
{
  long long v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last || v < 0) {
    throw ParseError("malformed epsilon '" + std::string(text) + "'",
                     base_offset + static_cast<std::size_t>(ptr - first));
  }
  return v;
}

} // namespace

Epsilon
Epsilon::parse(std::string_view text)
{
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Epsilon(parse_nonneg(text.substr(0, slash), 0),
                   parse_nonneg(text.substr(slash + 1), slash + 1));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw ParseError("malformed epsilon '" + std::string(text) + "'", dot);
    }
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
    }
    const long long whole = dot == 0 ? 0 : parse_nonneg(text.substr(0, dot), 0);
    return Epsilon(whole * den + parse_nonneg(frac, dot + 1), den);
  }
  return Epsilon(parse_nonneg(text, 0), 1);
}

std::string
Epsilon::str() const
{
  return std::to_string(num_) + "/" + std::to_string(den_);
}

GcWindow
gc_window(int n, const Epsilon& eps)
{
  // (1/2 -+ p/q) n = (q -+ 2p) n / 2q, both numerators nonnegative.
  const long long q2 = 2 * eps.den();
  const long long lo_num = (eps.den() - 2 * eps.num()) * static_cast<long long>(n);
  const long long hi_num = (eps.den() + 2 * eps.num()) * static_cast<long long>(n);
  return { static_cast<int>((lo_num + q2 - 1) / q2), static_cast<int>(hi_num / q2) };
}

bool
is_rll(std::span<const Symbol> c, int ell) noexcept
{
  return max_run_length(c) <= ell;
}

bool
is_balanced(std::span<const Symbol> c, const Epsilon& eps)
{
  return gc_window(static_cast<int>(c.size()), eps).contains(gc_content(c));
}

DnaSeq
parse_dna(std::string_view text)
{
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'A':
        out.push_back(Symbol::A);
        break;
      case 'T':
        out.push_back(Symbol::T);
        break;
      case 'C':
        out.push_back(Symbol::C);
        break;
      case 'G':
        out.push_back(Symbol::G);
        break;
      default:
        throw ParseError("invalid DNA character at offset " + std::to_string(i), i);
    }
  }
  return DnaSeq(std::move(out));
}

std::string
format_dna(std::span<const Symbol> c)
{
  std::string out;
  out.reserve(c.size());
  for (Symbol s : c) {
    out.push_back(to_char(s));
  }
  return out;
}

} // namespace dnasynth
