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

#include "cli.hpp"

#include "rate_table.hpp"

#include "dnasynth/codec_balanced.hpp"
#include "dnasynth/codec_rll.hpp"
#include "dnasynth/ecc.hpp"
#include "dnasynth/error.hpp"
#include "dnasynth/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <random>

namespace dnasynth::cli {

namespace {

using nlohmann::json;

struct CodeFlags
{
  int n = 0;
  int ell = 0;
  std::string epsilon;
  long long budget = 0;
  CLI::Option* epsilon_opt = nullptr;

  std::optional<Epsilon> eps() const
  {
    if (epsilon_opt == nullptr || epsilon_opt->count() == 0) {
      return std::nullopt;
    }
    return Epsilon::parse(epsilon);
  }
};

struct PayloadFlags
{
  std::string in_path;
  std::string out_path;
  std::size_t bits = 0;
  CLI::Option* bits_opt = nullptr;

  bool hex() const { return bits_opt != nullptr && bits_opt->count() > 0; }
};

struct CorruptFlags
{
  std::string op;
  std::size_t pos = 0;
  CLI::Option* pos_opt = nullptr;
  std::string symbol;
  std::uint64_t seed = 0;
};

// Line-oriented payload I/O with the line number kept for error reports.
class Payload
{
public:
  Payload(const PayloadFlags& flags, std::istream& in, std::ostream& out)
    : in_(&in)
    , out_(&out)
  {
    if (!flags.in_path.empty() && flags.in_path != "-") {
      file_in_ = std::make_unique<std::ifstream>(flags.in_path);
      if (!*file_in_) {
        throw ParamError("cannot open " + flags.in_path);
      }
      in_ = file_in_.get();
    }
    if (!flags.out_path.empty() && flags.out_path != "-") {
      file_out_ = std::make_unique<std::ofstream>(flags.out_path);
      if (!*file_out_) {
        throw ParamError("cannot open " + flags.out_path);
      }
      out_ = file_out_.get();
    }
  }

  /// Calls fn on every non-blank line; returns false if any call did.
  bool for_each_line(const std::function<bool(const std::string&)>& fn)
  {
    bool all = true;
    std::string text;
    while (std::getline(*in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') {
        text.pop_back();
      }
      if (text.empty()) {
        continue;
      }
      all = fn(text) && all;
    }
    return all;
  }

  std::ostream& out() { return *out_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::istream* in_;
  std::ostream* out_;
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
  std::size_t line_ = 0;
};

void
add_code_flags(CLI::App& cmd, CodeFlags& f, bool epsilon_required)
{
  cmd.add_option("--n", f.n, "code length")->required();
  cmd.add_option("--ell", f.ell, "maximum run length")->required();
  f.epsilon_opt = cmd.add_option("--epsilon", f.epsilon, "GC-balance slack p/q");
  if (epsilon_required) {
    f.epsilon_opt->required();
  }
  cmd.add_option("--T", f.budget, "synthesis-time budget in cycles")->required();
}

void
add_payload_flags(CLI::App& cmd, PayloadFlags& f, bool messages)
{
  cmd.add_option("--in", f.in_path, "input file, one item per line (default stdin)");
  cmd.add_option("--out", f.out_path, "output file (default stdout)");
  if (messages) {
    f.bits_opt = cmd.add_option("--bits", f.bits, "messages are hex carrying this many bits");
  }
}

MessageBits
parse_message(const std::string& text, const PayloadFlags& f)
{
  return f.hex() ? MessageBits::from_hex(text, f.bits) : MessageBits::from_binary(text);
}

std::string
format_message(const MessageBits& m, const PayloadFlags& f)
{
  return f.hex() ? m.to_hex() : m.to_binary();
}

json
epsilon_json(const std::optional<Epsilon>& eps)
{
  return eps ? json(eps->str()) : json(nullptr);
}

json
count_json(int n, int ell, const std::optional<Epsilon>& eps, long long budget, const BigCount& count)
{
  json j{ { "n", n }, { "ell", ell }, { "epsilon", epsilon_json(eps) }, { "T", budget },
          { "count", to_decimal(count) } };
  if (sgn(count) > 0) {
    j["log2_count"] = log2_approx(count);
    j["redundancy_symbols"] = n - static_cast<long long>(ceil_log4(count));
  } else {
    j["log2_count"] = nullptr;
    j["redundancy_symbols"] = nullptr;
  }
  return j;
}

int
cmd_count(const CodeFlags& f, std::ostream& out)
{
  const auto eps = f.eps();
  if (f.n < 1 || f.ell < 1) {
    throw ParamError("--n and --ell must be at least 1");
  }
  const BigCount count =
    eps ? count_balanced_total(f.n, f.ell, *eps, f.budget) : count_rll_total(f.n, f.ell, f.budget);
  out << count_json(f.n, f.ell, eps, f.budget, count).dump() << '\n';
  return 0;
}

// Wraps either plain codec behind one interface for encode/decode.
struct AnyCodec
{
  std::function<DnaSeq(const MessageBits&)> encode;
  std::function<MessageBits(std::span<const Symbol>)> decode;
};

AnyCodec
make_codec(const CodeFlags& f)
{
  if (const auto eps = f.eps()) {
    auto codec = std::make_shared<const BalancedCodec>(f.n, f.ell, *eps, f.budget);
    codec->message_bits();
    return { [codec](const MessageBits& m) { return codec->encode(m); },
             [codec](std::span<const Symbol> c) { return codec->decode(c); } };
  }
  auto codec = std::make_shared<const RllCodec>(f.n, f.ell, f.budget);
  codec->message_bits();
  return { [codec](const MessageBits& m) { return codec->encode(m); },
           [codec](std::span<const Symbol> c) { return codec->decode(c); } };
}

AnyCodec
make_ecc(const CodeFlags& f)
{
  auto codec = std::make_shared<const EccCodec>(EccParams{ f.n, f.ell, *f.eps(), f.budget });
  return { [codec](const MessageBits& m) { return codec->encode(m); },
           [codec](std::span<const Symbol> c) { return codec->decode(c); } };
}

int
cmd_encode(const AnyCodec& codec, const PayloadFlags& pf, Payload& io)
{
  io.for_each_line([&](const std::string& text) {
    io.out() << format_dna(codec.encode(parse_message(text, pf))) << '\n';
    return true;
  });
  return 0;
}

int
cmd_decode(const AnyCodec& codec, const PayloadFlags& pf, Payload& io)
{
  io.for_each_line([&](const std::string& text) {
    io.out() << format_message(codec.decode(parse_dna(text)), pf) << '\n';
    return true;
  });
  return 0;
}

std::uint64_t
draw(std::mt19937_64& rng, std::uint64_t bound)
{
  return rng() % bound;
}

int
cmd_corrupt(const CorruptFlags& f, Payload& io)
{
  if (!f.op.empty() && f.op != "insert" && f.op != "delete") {
    throw ParamError("--op must be insert or delete");
  }
  std::optional<Symbol> fixed_symbol;
  if (!f.symbol.empty()) {
    const DnaSeq s = parse_dna(f.symbol);
    if (s.size() != 1) {
      throw ParamError("--symbol takes one of A, C, G, T");
    }
    fixed_symbol = s[0];
  }
  std::mt19937_64 rng(f.seed);
  io.for_each_line([&](const std::string& text) {
    const DnaSeq c = parse_dna(text);
    const bool insert = f.op.empty() ? draw(rng, 2) == 0 : f.op == "insert";
    if (!insert && c.size() == 0) {
      throw RangeError("cannot delete from an empty strand");
    }
    const std::size_t positions = insert ? c.size() + 1 : c.size();
    const std::size_t pos = f.pos_opt->count() > 0 ? f.pos : draw(rng, positions);
    if (pos >= positions) {
      throw RangeError("--pos " + std::to_string(pos) + " outside [0, " + std::to_string(positions - 1) + "]");
    }
    DnaSeq y(c.view().first(pos));
    if (insert) {
      y.push_back(fixed_symbol ? *fixed_symbol : static_cast<Symbol>(draw(rng, 4) + 1));
      y.append(c.view().subspan(pos));
    } else {
      y.append(c.view().subspan(pos + 1));
    }
    io.out() << format_dna(y) << '\n';
    return true;
  });
  return 0;
}

int
cmd_verify(int ell, const std::optional<Epsilon>& eps, std::optional<long long> budget, Payload& io,
           std::ostream& err)
{
  std::size_t bad = 0;
  std::size_t first_bad = 0;
  const bool ok = io.for_each_line([&](const std::string& text) {
    const DnaSeq c = parse_dna(text);
    const int n = static_cast<int>(c.size());
    const int gc = gc_content(c);
    json j{ { "dna", text },         { "length", n },
            { "max_run", max_run_length(c) }, { "gc_content", gc },
            { "synthesis_time", n > 0 ? synthesis_time(c) : 0 } };
    bool pass = is_rll(c, ell);
    j["rll"] = pass;
    if (eps) {
      const GcWindow w = gc_window(n, *eps);
      j["gc_window"] = { w.lo, w.hi };
      j["balanced"] = w.contains(gc);
      pass = pass && w.contains(gc);
    }
    if (budget) {
      const bool fits = n == 0 || synthesis_time(c) <= *budget;
      j["time_ok"] = fits;
      pass = pass && fits;
    }
    j["ok"] = pass;
    io.out() << j.dump() << '\n';
    if (!pass && bad++ == 0) {
      first_bad = io.line();
    }
    return pass;
  });
  if (!ok) {
    err << json{ { "error", std::to_string(bad) + " strand(s) violate the constraints" },
                 { "kind", "constraint" },
                 { "line", first_bad } }
             .dump()
        << '\n';
    return 1;
  }
  return 0;
}

int
cmd_selftest(const std::string& grid, std::ostream& out)
{
  int count_max = 0;
  int codec_max = 0;
  if (grid == "small") {
    count_max = 6;
    codec_max = 5;
  } else if (grid == "full") {
    count_max = 12;
    codec_max = 10;
  } else {
    throw ParamError("unknown grid '" + grid + "' (expected small or full)");
  }
  std::size_t failed = 0;
  std::size_t checked = 0;
  for (int n = 1; n <= count_max; ++n) {
    const oracle::Census census(n);
    for (const auto& spec : oracle::exhaustive_grid(n)) {
      if (spec.n != n) {
        continue;
      }
      const BigCount dp = spec.epsilon ? count_balanced_total(n, spec.ell, *spec.epsilon, spec.budget)
                                       : count_rll_total(n, spec.ell, spec.budget);
      const std::uint64_t brute = census.count(spec.ell, spec.epsilon, spec.budget);
      json j{ { "spec", spec.str() }, { "count", to_decimal(dp) }, { "count_ok", dp == brute } };
      bool pass = dp == brute;
      if (n <= codec_max) {
        const auto report = oracle::check_codec(spec);
        j["codec"] = report.str();
        pass = pass && report.ok;
      }
      ++checked;
      failed += pass ? 0 : 1;
      out << j.dump() << '\n';
    }
  }
  out << json{ { "summary", grid }, { "checked", checked }, { "failed", failed } }.dump() << '\n';
  if (failed > 0) {
    throw ConstraintError("selftest: " + std::to_string(failed) + " spec(s) failed");
  }
  return 0;
}

int
cmd_rate_table(const std::string& grid, std::ostream& out)
{
  for (const auto& row : evaluate_rates(rate_grid(grid))) {
    const auto& c = row.cell;
    json j{ { "code", to_string(c.kind) },
            { "n", c.n },
            { "ell", c.ell },
            { "epsilon", epsilon_json(c.epsilon) },
            { "T", c.budget },
            { "feasible", row.feasible } };
    if (row.feasible) {
      j["count"] = to_decimal(row.count);
      j["k_bits"] = row.k_bits;
      j["redundancy_symbols"] = row.redundancy_symbols;
      j["measured_redundancy"] = row.measured_redundancy;
    } else {
      j["note"] = row.note;
    }
    if (c.kind == CodeKind::ecc) {
      j["parity_overhead"] = 2 * ceil_log4(c.n) + 8;
    }
    j["wall_time_ms"] = row.wall_time_ms;
    out << j.dump() << '\n';
  }
  return 0;
}

void
report_error(std::ostream& err, const std::string& message, std::string_view kind, std::size_t line,
             std::optional<std::size_t> offset = std::nullopt)
{
  json j{ { "error", message }, { "kind", kind } };
  if (line > 0) {
    j["line"] = line;
  }
  if (offset) {
    j["offset"] = *offset;
  }
  err << j.dump() << '\n';
}

} // namespace

int
run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "Constrained DNA codes under a synthesis-time budget", "dnasynth" };
  app.require_subcommand(1);

  CodeFlags count_flags;
  PayloadFlags payload;
  CorruptFlags corrupt;
  std::string grid = "small";
  std::string verify_epsilon;
  int verify_ell = 0;
  long long verify_budget = 0;

  auto* count = app.add_subcommand("count", "size of a constrained code as JSON");
  add_code_flags(*count, count_flags, false);

  struct CodeCommand
  {
    CLI::App* app = nullptr;
    bool ecc = false;
    bool encoding = false;
    CodeFlags code;
    PayloadFlags payload;
  };
  std::array<CodeCommand, 4> coders;
  coders[0].app = app.add_subcommand("encode", "messages to constrained strands");
  coders[1].app = app.add_subcommand("decode", "constrained strands to messages");
  coders[2].app = app.add_subcommand("ecc-encode", "messages to indel-correcting strands");
  coders[3].app = app.add_subcommand("ecc-decode", "strands within one indel to messages");
  for (std::size_t i = 0; i < coders.size(); ++i) {
    auto& c = coders[i];
    c.ecc = i >= 2;
    c.encoding = i % 2 == 0;
    add_code_flags(*c.app, c.code, c.ecc);
    add_payload_flags(*c.app, c.payload, true);
  }

  auto* corrupt_cmd = app.add_subcommand("corrupt", "inject one insertion or deletion per strand");
  corrupt_cmd->add_option("--op", corrupt.op, "insert or delete (default random)");
  corrupt.pos_opt = corrupt_cmd->add_option("--pos", corrupt.pos, "0-based position (default random)");
  corrupt_cmd->add_option("--symbol", corrupt.symbol, "inserted symbol (default random)");
  corrupt_cmd->add_option("--seed", corrupt.seed, "random seed");
  add_payload_flags(*corrupt_cmd, payload, false);

  auto* verify = app.add_subcommand("verify", "check strands against the constraints");
  verify->add_option("--ell", verify_ell, "maximum run length")->required();
  auto* verify_eps = verify->add_option("--epsilon", verify_epsilon, "GC-balance slack p/q");
  auto* verify_t = verify->add_option("--T", verify_budget, "synthesis-time budget");
  add_payload_flags(*verify, payload, false);

  auto* selftest = app.add_subcommand("selftest", "compare tables and codecs with brute force");
  selftest->add_option("--grid", grid, "small or full")->check(CLI::IsMember({ "small", "full" }));

  auto* rate_table = app.add_subcommand("rate-table", "redundancy of each code over a grid");
  rate_table->add_option("--grid", grid, "small or full")->check(CLI::IsMember({ "small", "full" }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, e.what(), "usage", 0);
    return 2;
  }

  std::unique_ptr<Payload> io;
  try {
    if (count->parsed()) {
      return cmd_count(count_flags, out);
    }
    if (selftest->parsed()) {
      return cmd_selftest(grid, out);
    }
    if (rate_table->parsed()) {
      return cmd_rate_table(grid, out);
    }
    for (const auto& c : coders) {
      if (!c.app->parsed()) {
        continue;
      }
      const AnyCodec codec = c.ecc ? make_ecc(c.code) : make_codec(c.code);
      io = std::make_unique<Payload>(c.payload, in, out);
      return c.encoding ? cmd_encode(codec, c.payload, *io) : cmd_decode(codec, c.payload, *io);
    }
    io = std::make_unique<Payload>(payload, in, out);
    if (corrupt_cmd->parsed()) {
      return cmd_corrupt(corrupt, *io);
    }
    const std::optional<Epsilon> eps =
      verify_eps->count() > 0 ? std::optional<Epsilon>(Epsilon::parse(verify_epsilon)) : std::nullopt;
    const std::optional<long long> budget =
      verify_t->count() > 0 ? std::optional<long long>(verify_budget) : std::nullopt;
    return cmd_verify(verify_ell, eps, budget, *io, err);
  } catch (const ParseError& e) {
    report_error(err, e.what(), e.kind(), io ? io->line() : 0, e.offset());
  } catch (const Error& e) {
    report_error(err, e.what(), e.kind(), io ? io->line() : 0);
  }
  return 1;
}

} // namespace dnasynth::cli
