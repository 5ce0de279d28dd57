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

#include "dnasynth/oracle.hpp"

#include "dnasynth/codec_balanced.hpp"
#include "dnasynth/codec_rll.hpp"
#include "dnasynth/ecc.hpp"
#include "dnasynth/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace dnasynth::oracle {

std::string
EnumerationSpec::str() const
{
  std::ostringstream out;
  out << "n=" << n << " ell=" << ell << " eps=" << (epsilon ? epsilon->str() : "none") << " T=" << budget;
  return out.str();
}

std::vector<long long>
budget_grid(int n)
{
  const long long n2 = n;
  std::vector<long long> budgets{ n2, (3 * n2 + 1) / 2, (5 * n2 + 1) / 2, 4 * n2 };
  budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
  return budgets;
}

std::vector<EnumerationSpec>
exhaustive_grid(int max_n)
{
  const std::vector<std::optional<Epsilon>> epsilons{
    std::nullopt, Epsilon(0, 1), Epsilon(1, 20), Epsilon(1, 4), Epsilon(1, 2),
  };
  std::vector<EnumerationSpec> grid;
  for (int n = 1; n <= max_n; ++n) {
    for (int ell = 1; ell <= 4; ++ell) {
      for (long long budget : budget_grid(n)) {
        for (const auto& eps : epsilons) {
          grid.push_back({ n, ell, eps, budget });
        }
      }
    }
  }
  return grid;
}

bool
satisfies(const EnumerationSpec& spec, std::span<const Symbol> c)
{
  if (c.size() != static_cast<std::size_t>(spec.n)) {
    return false;
  }
  if (c.empty()) {
    return true;
  }
  if (!is_rll(c, spec.ell)) {
    return false;
  }
  if (spec.epsilon && !is_balanced(c, *spec.epsilon)) {
    return false;
  }
  return synthesis_time(c) <= spec.budget;
}

DnaSeq
word_at(int n, std::uint64_t index)
{
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    symbols[static_cast<std::size_t>(i)] = static_cast<Symbol>((index & 3U) + 1);
    index >>= 2;
  }
  return DnaSeq(std::move(symbols));
}

namespace {

void
check_enumerable(int n)
{
  if (n < 0 || n > kMaxLength) {
    throw ParamError("oracle enumerates lengths 0.." + std::to_string(kMaxLength) + ", got " +
                     std::to_string(n));
  }
}

std::uint64_t
space_size(int n)
{
  return std::uint64_t{ 1 } << (2 * n);
}

} // namespace

SeqLess
code_order(const EnumerationSpec& spec)
{
  return spec.epsilon ? &balanced_seq_less : &seq_less;
}

std::vector<DnaSeq>
enumerate_sorted(const EnumerationSpec& spec)
{
  return enumerate_sorted(spec, code_order(spec));
}

std::vector<DnaSeq>
enumerate_sorted(const EnumerationSpec& spec, SeqLess less)
{
  check_enumerable(spec.n);
  std::vector<DnaSeq> out;
  const std::uint64_t words = space_size(spec.n);
  for (std::uint64_t i = 0; i < words; ++i) {
    DnaSeq c = word_at(spec.n, i);
    if (satisfies(spec, c)) {
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [less](const DnaSeq& a, const DnaSeq& b) { return less(a, b); });
  return out;
}

Census::Census(int n, Execution policy)
  : n_(n)
{
  check_enumerable(n);
  hist_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(4 * n + 1) *
                 static_cast<std::size_t>(n + 1),
               0);
  if (n == 0) {
    hist_[slot(0, 0, 0)] = 1;
    return;
  }
  const long long words = static_cast<long long>(space_size(n));
  const auto tally = [this, n](long long i, std::vector<std::uint64_t>& into) {
    const DnaSeq c = word_at(n, static_cast<std::uint64_t>(i));
    ++into[slot(max_run_length(c), static_cast<int>(synthesis_time(c)), gc_content(c))];
  };
  if (policy == Execution::serial) {
    for (long long i = 0; i < words; ++i) {
      tally(i, hist_);
    }
    return;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist_.size(), 0);
#pragma omp for schedule(static)
    for (long long i = 0; i < words; ++i) {
      tally(i, local);
    }
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) {
      hist_[k] += local[k];
    }
  }
}

std::size_t
Census::slot(int run, int time, int gc) const noexcept
{
  const std::size_t times = 4 * static_cast<std::size_t>(n_) + 1;
  const std::size_t gcs = static_cast<std::size_t>(n_) + 1;
  return (static_cast<std::size_t>(run) * times + static_cast<std::size_t>(time)) * gcs +
         static_cast<std::size_t>(gc);
}

std::uint64_t
Census::count(int ell, const std::optional<Epsilon>& eps, long long budget) const
{
  if (n_ == 0) {
    return 1;
  }
  const GcWindow window = eps ? gc_window(n_, *eps) : GcWindow{ 0, n_ };
  std::uint64_t sum = 0;
  for (int run = 1; run <= std::min(ell, n_); ++run) {
    for (int time = 0; time <= std::min<long long>(budget, 4LL * n_); ++time) {
      for (int gc = std::max(window.lo, 0); gc <= std::min(window.hi, n_); ++gc) {
        sum += hist_[slot(run, time, gc)];
      }
    }
  }
  return sum;
}

std::uint64_t
Census::total() const noexcept
{
  std::uint64_t sum = 0;
  for (auto h : hist_) {
    sum += h;
  }
  return sum;
}

namespace {

template <class Codec>
CodecReport
check_against(const Codec& codec, const EnumerationSpec& spec, const std::vector<DnaSeq>& list, SeqLess less)
{
  CodecReport report;
  const auto fail = [&](std::string what) {
    report.ok = false;
    report.divergence = spec.str() + ": " + std::move(what);
    return report;
  };

  if (codec.size() != list.size()) {
    return fail("codec size " + to_decimal(codec.size()) + " != oracle size " + std::to_string(list.size()));
  }
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    if (!less(list[i], list[i + 1])) {
      return fail("oracle order not strict at position " + std::to_string(i + 1) + " (" +
                  format_dna(list[i]) + ", " + format_dna(list[i + 1]) + ")");
    }
  }

  const long long size = static_cast<long long>(list.size());
  long long first_bad = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic, 1024) reduction(min : first_bad)
  for (long long i = 0; i < size; ++i) {
    try {
      const BigCount rank(static_cast<long>(i + 1));
      const DnaSeq word = codec.unrank(rank);
      if (word != list[static_cast<std::size_t>(i)] || !satisfies(spec, word) ||
          codec.rank(list[static_cast<std::size_t>(i)]) != rank) {
        first_bad = std::min(first_bad, i);
      }
    } catch (const Error&) {
      first_bad = std::min(first_bad, i);
    }
  }
  report.checked = list.size();
  if (first_bad == std::numeric_limits<long long>::max()) {
    return report;
  }

  const std::size_t i = static_cast<std::size_t>(first_bad);
  const std::string at = "rank " + std::to_string(i + 1) + ": ";
  try {
    const DnaSeq word = codec.unrank(BigCount(static_cast<unsigned long>(i) + 1));
    if (word != list[i]) {
      return fail(at + "unrank gives " + format_dna(word) + ", oracle has " + format_dna(list[i]));
    }
    if (!satisfies(spec, word)) {
      return fail(at + format_dna(word) + " violates the constraints");
    }
    return fail(at + "rank(" + format_dna(list[i]) + ") = " + to_decimal(codec.rank(list[i])));
  } catch (const Error& e) {
    return fail(at + e.what());
  }
}

} // namespace

CodecReport
check_codec(const EnumerationSpec& spec)
{
  return check_codec(spec, code_order(spec));
}

CodecReport
check_codec(const EnumerationSpec& spec, SeqLess less)
{
  if (spec.n < 1) {
    throw ParamError("codec check needs n >= 1");
  }
  const auto list = enumerate_sorted(spec, less);
  if (spec.epsilon) {
    return check_against(BalancedCodec(spec.n, spec.ell, *spec.epsilon, spec.budget), spec, list, less);
  }
  return check_against(RllCodec(spec.n, spec.ell, spec.budget), spec, list, less);
}

std::string
BallReport::str() const
{
  if (ok) {
    return "ok";
  }
  return "codewords " + std::to_string(first) + " and " + std::to_string(second) + " share " +
         (witness.empty() ? std::string("the empty word") : format_dna(witness));
}

namespace {

// Words of length <= 31 packed two bits per symbol (first symbol lowest)
// under a sentinel bit marking the length.
constexpr std::size_t kMaxPackedLength = 30;

std::uint64_t
pack(std::span<const Symbol> c) noexcept
{
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    bits |= static_cast<std::uint64_t>(value(c[i]) - 1) << (2 * i);
  }
  return bits;
}

DnaSeq
unpack(std::uint64_t key)
{
  std::size_t len = 0;
  while ((key >> (2 * (len + 1))) != 0) {
    ++len;
  }
  std::vector<Symbol> symbols(len);
  for (std::size_t i = 0; i < len; ++i) {
    symbols[i] = static_cast<Symbol>(((key >> (2 * i)) & 3U) + 1);
  }
  return DnaSeq(std::move(symbols));
}

void
packed_ball(std::span<const Symbol> c, std::vector<std::uint64_t>& out)
{
  out.clear();
  const std::uint64_t bits = pack(c);
  const std::size_t len = c.size();
  const auto low = [bits](std::size_t pos) {
    return pos == 0 ? std::uint64_t{ 0 } : bits & ((std::uint64_t{ 1 } << (2 * pos)) - 1);
  };
  const std::uint64_t shorter = std::uint64_t{ 1 } << (2 * (len - 1));
  const std::uint64_t longer = std::uint64_t{ 1 } << (2 * (len + 1));
  for (std::size_t pos = 0; pos < len; ++pos) {
    out.push_back(shorter | low(pos) | ((bits >> (2 * (pos + 1))) << (2 * pos)));
  }
  for (std::size_t pos = 0; pos <= len; ++pos) {
    const std::uint64_t high = (bits >> (2 * pos)) << (2 * (pos + 1));
    for (std::uint64_t a = 0; a < 4; ++a) {
      out.push_back(longer | low(pos) | (a << (2 * pos)) | high);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::uint64_t
mix(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BallReport
packed_disjointness(std::span<const DnaSeq> codewords)
{
  std::size_t elements = 0;
  for (const auto& c : codewords) {
    elements += 5 * c.size() + 4;
  }
  constexpr std::size_t kEntriesPerPass = std::size_t{ 1 } << 23;
  const std::uint64_t passes = std::max<std::uint64_t>(1, (elements + kEntriesPerPass - 1) / kEntriesPerPass);
  const long long words = static_cast<long long>(codewords.size());

  for (std::uint64_t pass = 0; pass < passes; ++pass) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, std::uint32_t>> local;
      std::vector<std::uint64_t> ball;
#pragma omp for schedule(static)
      for (long long i = 0; i < words; ++i) {
        packed_ball(codewords[static_cast<std::size_t>(i)], ball);
        for (auto key : ball) {
          if (mix(key) % passes == pass) {
            local.emplace_back(key, static_cast<std::uint32_t>(i));
          }
        }
      }
#pragma omp critical
      entries.insert(entries.end(), local.begin(), local.end());
    }
    std::sort(entries.begin(), entries.end());
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
      if (entries[k].first == entries[k + 1].first) {
        return { false, entries[k].second, entries[k + 1].second, unpack(entries[k].first) };
      }
    }
  }
  return {};
}

BallReport
generic_disjointness(std::span<const DnaSeq> codewords)
{
  std::unordered_map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (const auto& word : indel_ball(codewords[i])) {
      auto [it, inserted] = owner.emplace(format_dna(word), i);
      if (!inserted) {
        return { false, it->second, i, word };
      }
    }
  }
  return {};
}

} // namespace

BallReport
check_ball_disjointness(std::span<const DnaSeq> codewords)
{
  const bool packable =
    codewords.size() < std::numeric_limits<std::uint32_t>::max() &&
    std::all_of(codewords.begin(), codewords.end(),
                [](const DnaSeq& c) { return !c.empty() && c.size() <= kMaxPackedLength; });
  return packable ? packed_disjointness(codewords) : generic_disjointness(codewords);
}

} // namespace dnasynth::oracle
