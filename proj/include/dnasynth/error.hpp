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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnasynth {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's JSON error output.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed textual input (DNA text, bit strings, rationals).
class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t offset)
    : Error(what)
    , offset_(offset)
  {
  }

  std::size_t offset() const noexcept { return offset_; }
  const char* kind() const noexcept override { return "parse"; }

private:
  std::size_t offset_;
};

/// A sequence or run violates the active RLL / balance / time constraints.
class ConstraintError : public Error
{
public:
  using Error::Error;
  const char* kind() const noexcept override { return "constraint"; }
};

/// Rank or message length outside the code's range.
class RangeError : public Error
{
public:
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

/// Parameters describe an empty or ill-formed code.
class ParamError : public Error
{
public:
  using Error::Error;
  const char* kind() const noexcept override { return "params"; }
};

class UncorrectableError : public Error
{
public:
  using Error::Error;
  const char* kind() const noexcept override { return "uncorrectable"; }
};

/// Two distinct words decode from the same received word. Cannot happen for
/// inputs within one indel of a codeword; seeing it means an internal bug.
class AmbiguousDecodeError : public Error
{
public:
  using Error::Error;
  const char* kind() const noexcept override { return "ambiguous"; }
};

} // namespace dnasynth
