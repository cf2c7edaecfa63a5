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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "lnr/lnr.h"

namespace {

std::string fixture(const char* name) { return std::string(LNR_FIXTURE_DIR) + "/" + name; }

struct Loaded {
  lnr_structure* s = nullptr;
  explicit Loaded(const char* name) { REQUIRE(lnr_structure_load(fixture(name).c_str(), &s) == LNR_OK); }
  ~Loaded() { lnr_structure_free(s); }
};

std::string take(char* raw) {
  std::string out = raw == nullptr ? "" : raw;
  lnr_string_free(raw);
  return out;
}

lnr_options json_options() {
  lnr_options o;
  lnr_options_init(&o);
  o.json = 1;
  return o;
}

}  // namespace

TEST_CASE("options and status strings") {
  lnr_options o;
  lnr_options_init(&o);
  CHECK(o.json == 0);
  CHECK(o.cap_order == 6);
  CHECK(o.cap_mg == 64);
  CHECK(o.threads == 1);
  CHECK(std::string(lnr_status_string(LNR_OK)) == "ok");
  CHECK(std::string(lnr_status_string(LNR_E_CAP_EXCEEDED)) == "cap exceeded");
  CHECK(std::string(lnr_suite_names()).find("local_equivalence") != std::string::npos);
}

TEST_CASE("loading and inspecting structures") {
  Loaded z4("z4.json");
  CHECK(std::string(lnr_structure_kind(z4.s)) == "near_ring");
  CHECK(lnr_structure_order(z4.s) == 4);

  char* raw = nullptr;
  REQUIRE(lnr_structure_serialize(z4.s, &raw) == LNR_OK);
  const std::string text = take(raw);
  lnr_structure* back = nullptr;
  REQUIRE(lnr_structure_parse(text.c_str(), nullptr, &back) == LNR_OK);
  char* again = nullptr;
  REQUIRE(lnr_structure_serialize(back, &again) == LNR_OK);
  CHECK(take(again) == text);
  lnr_structure_free(back);

  Loaded module("z4_on_z2.json");
  CHECK(std::string(lnr_structure_kind(module.s)) == "left_module");
}

TEST_CASE("error statuses") {
  lnr_structure* s = nullptr;
  CHECK(lnr_structure_load(fixture("malformed.json").c_str(), &s) == LNR_E_MALFORMED);
  CHECK(std::string(lnr_last_error()).find("line 4") != std::string::npos);
  CHECK(lnr_structure_load(fixture("missing.json").c_str(), &s) == LNR_E_IO);
  CHECK(lnr_structure_load(fixture("broken.json").c_str(), &s) == LNR_E_VALIDATION);
  CHECK(lnr_structure_load(nullptr, &s) == LNR_E_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(lnr_structure_parse("{\"kind\":\"loop\"", nullptr, &s) == LNR_E_MALFORMED);

  Loaded z4("z4.json");
  lnr_verdict v;
  char* raw = nullptr;
  CHECK(lnr_verify(z4.s, "bogus", nullptr, &v, &raw) == LNR_E_UNKNOWN_SUITE);
  CHECK(lnr_mtables(z4.s, 0, nullptr, &raw) == LNR_E_CAP_EXCEEDED);
  CHECK(raw == nullptr);
}

TEST_CASE("check reports validation failures as a FAIL verdict") {
  const lnr_options o = json_options();
  lnr_verdict v = LNR_VERDICT_PASS;
  char* raw = nullptr;
  REQUIRE(lnr_check_file(fixture("broken.json").c_str(), &o, &v, &raw) == LNR_OK);
  CHECK(v == LNR_VERDICT_FAIL);
  const auto report = nlohmann::json::parse(take(raw));
  CHECK(report.at("results").at("witness").at("elements") == nlohmann::json::array({2, 3}));

  REQUIRE(lnr_check_file(fixture("z4.json").c_str(), &o, &v, &raw) == LNR_OK);
  CHECK(v == LNR_VERDICT_PASS);
  take(raw);
}

TEST_CASE("radicals, localness and M0 tables") {
  const lnr_options o = json_options();
  Loaded z4("z4.json");
  lnr_verdict v;
  char* raw = nullptr;
  REQUIRE(lnr_localness(z4.s, &o, &v, &raw) == LNR_OK);
  auto report = nlohmann::json::parse(take(raw));
  CHECK(v == LNR_VERDICT_PASS);
  CHECK(report.at("results").at("local") == true);
  CHECK(report.at("results").at("m") == nlohmann::json::array({0, 2}));

  REQUIRE(lnr_radicals(z4.s, &o, &v, &raw) == LNR_OK);
  report = nlohmann::json::parse(take(raw));
  CHECK(report.at("results").at("J2") == nlohmann::json::array({0, 2}));

  Loaded z3("z3.json");
  REQUIRE(lnr_mtables(z3.s, 1, &o, &raw) == LNR_OK);
  lnr_structure* m0 = nullptr;
  REQUIRE(lnr_structure_parse(take(raw).c_str(), nullptr, &m0) == LNR_OK);
  CHECK(lnr_structure_order(m0) == 9);
  REQUIRE(lnr_analyze(m0, &o, &raw) == LNR_OK);
  report = nlohmann::json::parse(take(raw));
  CHECK(report.at("results").at("left_distributive") == false);
  lnr_structure_free(m0);

  Loaded loop("klein4.json");
  REQUIRE(lnr_radicals(loop.s, &o, &v, &raw) == LNR_OK);
  CHECK(v == LNR_VERDICT_PARTIAL);
  take(raw);
}

TEST_CASE("enumeration streams one line per record") {
  std::vector<std::string> lines;
  auto collect = [](const char* line, void* user) -> int {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
    return 1;
  };
  lnr_census_query q{};
  q.order = 4;
  q.up_to_iso = 1;
  q.limit = -1;
  size_t count = 0;
  REQUIRE(lnr_enumerate(&q, nullptr, collect, &lines, &count) == LNR_OK);
  CHECK(count == 2);
  CHECK(lines.size() == 2);
  CHECK(nlohmann::json::parse(lines[0]).at("name") == "loop4.1");

  Loaded z4("z4.json");
  lines.clear();
  q.near_rings = 1;
  q.additive = z4.s;
  q.filters = LNR_FILTER_UNITAL | LNR_FILTER_ZERO_SYMMETRIC;
  REQUIRE(lnr_enumerate(&q, nullptr, collect, &lines, &count) == LNR_OK);
  CHECK(count >= 1);
  bool ring = false;
  for (const auto& l : lines) ring = ring || nlohmann::json::parse(l).at("analysis").at("ring") == true;
  CHECK(ring);

  // Stopping early from the callback.
  auto stop = [](const char*, void*) -> int { return 0; };
  q.additive = nullptr;
  q.near_rings = 0;
  q.order = 5;
  REQUIRE(lnr_enumerate(&q, nullptr, stop, nullptr, &count) == LNR_OK);
  CHECK(count == 1);

  lnr_options o;
  lnr_options_init(&o);
  q.order = 7;
  CHECK(lnr_enumerate(&q, &o, collect, &lines, &count) == LNR_E_CAP_EXCEEDED);
}

TEST_CASE("verify over the corpus is byte-stable") {
  const lnr_options o = json_options();
  lnr_verdict v;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(lnr_verify(nullptr, "local_equivalence", &o, &v, &a) == LNR_OK);
  CHECK(v == LNR_VERDICT_PASS);
  REQUIRE(lnr_verify(nullptr, "local_equivalence", &o, &v, &b) == LNR_OK);
  CHECK(take(a) == take(b));
}
