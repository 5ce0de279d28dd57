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

#include "dnasynth/ecc.hpp"

#include "dnasynth/error.hpp"

#include <algorithm>

namespace dnasynth {

int
ceil_log4(long long n) noexcept
{
  int v = 0;
  long long power = 1;
  while (power < n) {
    power *= 4;
    ++v;
  }
  return v;
}

namespace {

const EccParams&
validated(const EccParams& p)
{
  if (p.ell < 2) {
    throw ParamError("indel code needs ell >= 2 (parity contains runs of length 2)");
  }
  const int parity = 2 * ceil_log4(p.n) + 8;
  const int data = p.n - parity;
  if (data < 1) {
    throw ParamError("length " + std::to_string(p.n) + " leaves no room for data after " +
                     std::to_string(parity) + " parity symbols");
  }
  const long long inner_budget = p.budget - 4LL * parity;
  if (inner_budget < data) {
    throw ParamError("budget " + std::to_string(p.budget) + " leaves " + std::to_string(inner_budget) +
                     " cycles for " + std::to_string(data) + " data symbols");
  }
  return p;
}

} // namespace

EccCodec::EccCodec(const EccParams& params)
  : EccCodec(params, nullptr)
{
}

EccCodec::EccCodec(const EccParams& params, std::shared_ptr<const BalancedCountTable> table)
  : params_(validated(params))
  , digits_(ceil_log4(params.n))
  , inner_(params.n - (2 * ceil_log4(params.n) + 8), params.ell, params.epsilon,
           params.budget - 4LL * (2 * ceil_log4(params.n) + 8), std::move(table))
{
  if (sgn(inner_.size()) == 0) {
    throw ParamError("inner constrained code is empty");
  }
}

DnaSeq
EccCodec::parity(std::span<const Symbol> data) const
{
  if (data.size() != static_cast<std::size_t>(data_length())) {
    throw ParamError("data block must have length " + std::to_string(data_length()));
  }
  const Syndromes syn = compute_syndromes(data, params_.n);
  const Symbol shifted = shifted_mod4(value(data.back()) + 2);
  // Smallest symbol other than f(shifted).
  const Symbol beta = complement(shifted) == Symbol::A ? Symbol::T : Symbol::A;

  DnaSeq p;
  p.reserve(static_cast<std::size_t>(parity_length()));
  p.push_back(shifted);
  p.push_back(shifted);
  p.push_back(complement(shifted));
  p.push_back(complement(shifted));
  p.push_back(beta);
  p.push_back(complement(beta));
  for (Symbol tau : digits_base4(syn.a, digits_)) {
    p.push_back(tau);
    p.push_back(complement(tau));
  }
  p.push_back(syn.b);
  p.push_back(complement(syn.b));
  return p;
}

DnaSeq
EccCodec::encode(const MessageBits& message) const
{
  DnaSeq c = inner_.encode(message);
  c.append(parity(c));
  return c;
}

DnaSeq
EccCodec::recover_data(std::span<const Symbol> received) const
{
  const std::size_t n = static_cast<std::size_t>(params_.n);
  const std::size_t k1 = static_cast<std::size_t>(data_length());
  const std::size_t v = static_cast<std::size_t>(digits_);
  if (received.size() + 1 < n || received.size() > n + 1) {
    throw RangeError("length out of range: got " + std::to_string(received.size()) + ", expected " +
                     std::to_string(n) + " +- 1");
  }
  // Positions below are 0-based. Unshifted layout: a' at k1, k1+1; tau_i at
  // k1+4+2i (i = 1..v); b at n-2.
  if (received.size() == n || received[k1] == received[k1 + 1]) {
    return DnaSeq(received.first(k1));
  }
  const bool inserted = received.size() == n + 1;
  const std::size_t first_tau = inserted ? k1 + 7 : k1 + 5;
  std::vector<Symbol> digits;
  digits.reserve(v);
  for (std::size_t i = 0; i < v; ++i) {
    digits.push_back(received[first_tau + 2 * i]);
  }
  const Syndromes syn{ undigits_base4(digits), received[inserted ? n - 1 : n - 3], params_.n };
  if (inserted) {
    return vt_decode_insertion(received.first(k1 + 1), static_cast<int>(k1), syn);
  }
  return vt_decode_deletion(received.first(k1 - 1), static_cast<int>(k1), syn);
}

MessageBits
EccCodec::decode(std::span<const Symbol> received) const
{
  const DnaSeq data = recover_data(received);
  try {
    return inner_.decode(data);
  } catch (const ConstraintError& e) {
    throw UncorrectableError(std::string("uncorrectable: ") + e.what());
  } catch (const RangeError& e) {
    throw UncorrectableError(std::string("uncorrectable: ") + e.what());
  }
}

std::vector<DnaSeq>
indel_ball(std::span<const Symbol> c)
{
  std::vector<DnaSeq> ball;
  ball.reserve(6 * c.size() + 4);
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    DnaSeq shorter(c.first(pos));
    shorter.append(c.subspan(pos + 1));
    ball.push_back(std::move(shorter));
  }
  for (std::size_t pos = 0; pos <= c.size(); ++pos) {
    for (int a = 1; a <= 4; ++a) {
      DnaSeq longer(c.first(pos));
      longer.push_back(static_cast<Symbol>(a));
      longer.append(c.subspan(pos));
      ball.push_back(std::move(longer));
    }
  }
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  return ball;
}

} // namespace dnasynth
