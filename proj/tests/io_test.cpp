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

#include <doctest.h>

#include "lnr/io.hpp"
#include "lnr/report.hpp"
#include "lnr/suites.hpp"
#include "test_util.hpp"

using namespace lnr;
using lnr::testing::fixture;

namespace {

Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::io;
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixtures load as their declared kinds") {
  const NamedStructure z4 = load_structure(fixture("z4.json"));
  CHECK(z4.name == "Z4");
  CHECK(kind_name(z4.value) == "near_ring");
  CHECK(std::get<LoopNearRing>(z4.value) == LoopNearRing::integers_mod(4));

  const NamedStructure k = load_structure(fixture("klein4.json"));
  CHECK(kind_name(k.value) == "loop");
  CHECK(std::get<FiniteLoop>(k.value).labels() == std::vector<std::string>{"0", "a", "b", "c"});

  const NamedStructure m = load_structure(fixture("z4_on_z2.json"));
  CHECK(kind_name(m.value) == "left_module");
  const auto& lm = std::get<LeftModule>(m.value);
  CHECK(lm.ring() == LoopNearRing::integers_mod(4));
  CHECK(structure_order(m.value) == 2);
}

TEST_CASE("bad input is reported by kind and location") {
  CHECK(error_code([] { load_structure(fixture("broken.json")); }) == Errc::not_latin_square);
  CHECK(error_message([] { load_structure(fixture("broken.json")); }).find("row 2") != std::string::npos);
  CHECK(error_code([] { load_structure(fixture("bad_action.json")); }) == Errc::action_law_violated);
  CHECK(error_code([] { load_structure(fixture("missing.json")); }) == Errc::io);

  const std::string syntax = error_message([] { load_structure(fixture("malformed.json")); });
  CHECK(syntax.find("malformed.json") != std::string::npos);
  CHECK(syntax.find("line 4") != std::string::npos);
  CHECK(error_message([] { load_structure(fixture("missing_field.json")); }).find("field 'mul'") !=
        std::string::npos);

  CHECK(error_code([] { parse_structure(R"({"kind":"loop","add":[[0,1],[1,5]]})"); }) == Errc::malformed);
  CHECK(error_message([] { parse_structure(R"({"kind":"loop","add":[[0,1],[1,5]]})"); })
            .find("add[1][1]") != std::string::npos);
  CHECK(error_code([] { parse_structure(R"({"kind":"group","add":[[0]]})"); }) == Errc::malformed);
  CHECK(error_code([] { parse_structure(R"([1,2])"); }) == Errc::malformed);
  CHECK(error_code([] { parse_structure(R"({"kind":"loop","add":[[0,1],[1]]})"); }) == Errc::malformed);
}

TEST_CASE("serialization round-trips every corpus structure") {
  for (const NamedStructure& s : build_corpus()) {
    CAPTURE(s.name);
    const std::string text = serialize_structure(s);
    const NamedStructure back = parse_structure(text);
    CHECK(back.name == s.name);
    CHECK(back.value == s.value);
    CHECK(serialize_structure(back) == text);
    CHECK(content_hash(back) == content_hash(s));
  }
}

TEST_CASE("content hashes ignore the name") {
  NamedStructure a{"a", LoopNearRing::integers_mod(4)};
  NamedStructure b{"b", LoopNearRing::integers_mod(4)};
  NamedStructure c{"a", LoopNearRing::integers_mod(5)};
  CHECK(content_hash(a) == content_hash(b));
  CHECK(content_hash(a) != content_hash(c));
  CHECK(content_hash(a).size() == 16);
  // Reference values of FNV-1a.
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("reports carry subject, status and witness") {
  const NamedStructure z6 = load_structure(fixture("z6.json"));
  const Json local = localness_report(z6);
  CHECK(local.at("status") == kPass);
  CHECK(local.at("subject").at("name") == "Z6");
  CHECK(local.at("results").at("local") == false);

  const Json partial = radicals_report({"Z3 loop", FiniteLoop::cyclic(3)});
  CHECK(partial.at("status") == kPartial);

  const Error e(Errc::not_associative, "oops", Witness{"(ab)c=a(bc)", {1, 2, 3}});
  const Json fail = failure_report("x", e);
  CHECK(fail.at("status") == kFail);
  CHECK(fail.at("results").at("witness").at("elements") == Json::array({1, 2, 3}));

  const std::string text = render_text(local);
  CHECK(text.rfind("status: pass", 0) == 0);
}

TEST_CASE("JSON helpers") {
  CHECK(to_json(ElementSet(4, {0, 2})) == Json::array({0, 2}));
  CHECK(to_json(std::vector<ElementSet>{ElementSet(2, {0}), ElementSet(2, {0, 1})}).dump() == "[[0],[0,1]]");
  CHECK(to_json(Witness{"law", {1}}).at("law") == "law");
}
