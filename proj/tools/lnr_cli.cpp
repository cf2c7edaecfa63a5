// Copyright 2026 The lnr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 pass, 1 mathematical failure,
// 2 usage, I/O, malformed input or exceeded caps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "lnr/lnr.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct StructureDeleter {
  void operator()(lnr_structure* s) const { lnr_structure_free(s); }
};
using StructurePtr = std::unique_ptr<lnr_structure, StructureDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lnr_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_for(lnr_status status) {
  if (status == LNR_OK) return kExitPass;
  std::cerr << "error: " << lnr_last_error() << "\n";
  return status == LNR_E_VALIDATION ? kExitFail : kExitUsage;
}

int exit_for(lnr_verdict verdict) { return verdict == LNR_VERDICT_FAIL ? kExitFail : kExitPass; }

// Writes to `path`, or stdout when empty.
bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

lnr_status load(const std::string& path, StructurePtr& out) {
  lnr_structure* raw = nullptr;
  const lnr_status st = lnr_structure_load(path.c_str(), &raw);
  out.reset(raw);
  return st;
}

struct Globals {
  bool json = false;
  std::string out;
  std::size_t cap_order = 6;
  std::size_t cap_mg = 64;
  unsigned threads = 1;

  lnr_options options() const {
    lnr_options o;
    lnr_options_init(&o);
    o.json = json ? 1 : 0;
    o.cap_order = cap_order;
    o.cap_mg = cap_mg;
    o.threads = threads;
    return o;
  }
};

using ReportFn = lnr_status (*)(const lnr_structure*, const lnr_options*, lnr_verdict*, char**);

int run_report(const Globals& g, const std::string& path, ReportFn fn) {
  StructurePtr s;
  if (lnr_status st = load(path, s); st != LNR_OK) return exit_for(st);
  const lnr_options o = g.options();
  lnr_verdict verdict = LNR_VERDICT_PASS;
  char* raw = nullptr;
  if (lnr_status st = fn(s.get(), &o, &verdict, &raw); st != LNR_OK) return exit_for(st);
  StringPtr text(raw);
  if (!write_output(g.out, text.get())) return kExitUsage;
  return exit_for(verdict);
}

lnr_status analyze_adapter(const lnr_structure* s, const lnr_options* o, lnr_verdict* v, char** out) {
  *v = LNR_VERDICT_PASS;
  return lnr_analyze(s, o, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loops and loop near-rings: validation, radicals, localness, census"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--cap-order", g.cap_order, "Largest census order")->capture_default_str();
  app.add_option("--cap-mg", g.cap_mg, "Largest element count of M(G) and M0(G)")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string path;
  auto* check = app.add_subcommand("check", "Validate a structure file");
  check->add_option("path", path)->required();
  auto* analyze = app.add_subcommand("analyze", "Substructures and invariants");
  analyze->add_option("path", path)->required();
  auto* radicals = app.add_subcommand("radicals", "R, J2, J0 and D of a near-ring");
  radicals->add_option("path", path)->required();
  auto* local = app.add_subcommand("local", "Localness conditions of a near-ring");
  local->add_option("path", path)->required();

  auto* mtables = app.add_subcommand("mtables", "Write M(G) or M0(G) as a structure file");
  mtables->add_option("path", path)->required();
  bool mt_zero = false;
  mtables->add_flag("--zero-symmetric", mt_zero, "Only maps fixing 0");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("path", path, "Structure file");
  bool corpus = false;
  std::string suite = "all";
  verify->add_flag("--corpus", corpus, "Use the built-in corpus");
  verify->add_option("--suite", suite, std::string("One of: ") + lnr_suite_names())->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Census of loops or near-rings");
  std::string what;
  enumerate->add_option("kind", what, "loops or nearrings")
      ->required()
      ->check(CLI::IsMember({"loops", "nearrings"}));
  std::size_t order = 0;
  std::string additive;
  long long limit = -1;
  bool up_to_iso = false, unital = false, zero_symmetric = false, non_assoc = false,
       not_ld = false, want_local = false, near_field = false;
  enumerate->add_option("--order", order, "Order of the structures");
  enumerate->add_option("--additive", additive, "Additive loop (loop or near-ring file)");
  enumerate->add_flag("--up-to-iso", up_to_iso, "One representative per isomorphism class");
  enumerate->add_flag("--unital", unital);
  enumerate->add_flag("--zero-symmetric", zero_symmetric);
  enumerate->add_flag("--non-associative-add", non_assoc);
  enumerate->add_flag("--not-left-distributive", not_ld);
  enumerate->add_flag("--local", want_local);
  enumerate->add_flag("--near-field", near_field);
  enumerate->add_option("--limit", limit, "Stop after this many records")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*check) {
    const lnr_options o = g.options();
    lnr_verdict verdict = LNR_VERDICT_PASS;
    char* raw = nullptr;
    if (lnr_status st = lnr_check_file(path.c_str(), &o, &verdict, &raw); st != LNR_OK) {
      return exit_for(st);
    }
    StringPtr text(raw);
    if (!write_output(g.out, text.get())) return kExitUsage;
    if (verdict == LNR_VERDICT_FAIL) std::cerr << "error: " << lnr_last_error() << "\n";
    return exit_for(verdict);
  }
  if (*analyze) return run_report(g, path, analyze_adapter);
  if (*radicals) return run_report(g, path, lnr_radicals);
  if (*local) return run_report(g, path, lnr_localness);

  if (*mtables) {
    StructurePtr s;
    if (lnr_status st = load(path, s); st != LNR_OK) return exit_for(st);
    const lnr_options o = g.options();
    char* raw = nullptr;
    if (lnr_status st = lnr_mtables(s.get(), mt_zero ? 1 : 0, &o, &raw); st != LNR_OK) {
      return exit_for(st);
    }
    StringPtr text(raw);
    return write_output(g.out, text.get()) ? kExitPass : kExitUsage;
  }

  if (*verify) {
    if (corpus == !path.empty()) {
      std::cerr << "error: give either a structure file or --corpus\n";
      return kExitUsage;
    }
    StructurePtr s;
    if (!corpus) {
      if (lnr_status st = load(path, s); st != LNR_OK) return exit_for(st);
    }
    const lnr_options o = g.options();
    lnr_verdict verdict = LNR_VERDICT_PASS;
    char* raw = nullptr;
    if (lnr_status st = lnr_verify(s.get(), suite.c_str(), &o, &verdict, &raw); st != LNR_OK) {
      return exit_for(st);
    }
    StringPtr text(raw);
    if (!write_output(g.out, text.get())) return kExitUsage;
    return exit_for(verdict);
  }

  // enumerate
  StructurePtr add;
  if (!additive.empty()) {
    if (lnr_status st = load(additive, add); st != LNR_OK) return exit_for(st);
  } else if (order == 0) {
    std::cerr << "error: enumerate needs --order or --additive\n";
    return kExitUsage;
  }
  lnr_census_query q{};
  q.near_rings = what == "nearrings" ? 1 : 0;
  q.order = order;
  q.additive = add.get();
  q.filters = (unital ? LNR_FILTER_UNITAL : 0u) | (zero_symmetric ? LNR_FILTER_ZERO_SYMMETRIC : 0u) |
              (non_assoc ? LNR_FILTER_NON_ASSOCIATIVE_ADD : 0u) |
              (not_ld ? LNR_FILTER_NOT_LEFT_DISTRIBUTIVE : 0u) | (want_local ? LNR_FILTER_LOCAL : 0u) |
              (near_field ? LNR_FILTER_NEAR_FIELD : 0u);
  q.up_to_iso = up_to_iso ? 1 : 0;
  q.limit = limit;

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!g.out.empty()) {
    file.open(g.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  const lnr_options o = g.options();
  auto on_line = [](const char* line, void* user) -> int {
    auto& os = *static_cast<std::ostream*>(user);
    os << line << '\n';
    return os ? 1 : 0;
  };
  std::size_t count = 0;
  const lnr_status st = lnr_enumerate(&q, &o, on_line, sink, &count);
  sink->flush();
  if (st != LNR_OK) return exit_for(st);
  std::cerr << count << " record(s)\n";
  return kExitPass;
}
