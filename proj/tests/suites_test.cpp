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

#include <map>

#include "lnr/io.hpp"
#include "lnr/report.hpp"
#include "lnr/suites.hpp"
#include "test_util.hpp"

using namespace lnr;

namespace {

const std::vector<NamedStructure>& corpus() {
  static const std::vector<NamedStructure> c = build_corpus();
  return c;
}

}  // namespace

TEST_CASE("the corpus covers the pinned families") {
  std::map<std::string, std::size_t> kinds;
  std::size_t loops5 = 0, genuine = 0;
  bool has_m0z3 = false;
  for (const auto& s : corpus()) {
    ++kinds[std::string(kind_name(s.value))];
    if (const auto* g = std::get_if<FiniteLoop>(&s.value)) loops5 += g->order() == 5 ? 1 : 0;
    if (const auto* n = std::get_if<LoopNearRing>(&s.value)) {
      genuine += n->additive().associative() ? 0 : 1;
      has_m0z3 = has_m0z3 || s.name == "M0(Z3)";
    }
  }
  CHECK(loops5 == 6);
  CHECK(kinds["loop"] == 11);
  CHECK(kinds["near_ring"] == 15);
  CHECK(genuine == 4);
  CHECK(has_m0z3);
  CHECK(kinds["left_module"] > 0);
  CHECK(kinds["bimodule"] > 0);
  CHECK(corpus().size() == 45);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 13);
  CHECK(is_suite("all"));
  CHECK(is_suite("k_plus_i"));
  CHECK_FALSE(is_suite("bogus"));
}

TEST_CASE("every suite passes on the corpus except one containment") {
  for (std::string_view name : suite_names()) {
    if (name == "all" || name == "radical_containments") continue;
    CAPTURE(name);
    const Json r = verify_corpus(corpus(), name);
    CHECK(r.at("status") == kPass);
    CHECK(r.at("results").at(std::string(name)).at("checks").get<std::size_t>() > 0);
  }
}

TEST_CASE("D(N) in R(N) fails on exactly one corpus near-ring") {
  const Json r = verify_corpus(corpus(), "radical_containments");
  CHECK(r.at("status") == kFail);
  const Json& s = r.at("results").at("radical_containments");
  CHECK(s.at("failure_count") == 1);
  const Json& f = s.at("failures").at(0);
  CHECK(f.at("structure") == "nearring4.3");
  CHECK(f.at("witness").at("law") == "D(N) in R(N)");
  CHECK(f.at("witness").at("sets") == Json::parse("[[0,1],[0]]"));

  // The named structure is the counterexample built by hand.
  for (const auto& c : corpus()) {
    if (c.name != "nearring4.3") continue;
    const auto& n = std::get<LoopNearRing>(c.value);
    CHECK(canonical_form(n) == canonical_form(lnr::testing::d_not_in_r_example()));
  }
}

TEST_CASE("corpus verification is deterministic across thread counts") {
  const std::string one = verify_corpus(corpus(), "all", 1).dump(2);
  const std::string four = verify_corpus(corpus(), "all", 4).dump(2);
  CHECK(one == four);
  CHECK(verify_corpus(corpus(), "all", 1).dump(2) == one);
}

TEST_CASE("single structures") {
  const NamedStructure z4 = load_structure(lnr::testing::fixture("z4.json"));
  const Json r = verify_structure(z4, "all");
  CHECK(r.at("status") == kPass);

  // Radical suites do not apply to a bare loop.
  const Json loop = verify_structure({"Z3", FiniteLoop::cyclic(3)}, "quasiregular");
  CHECK(loop.at("status") == kPartial);
  CHECK(loop.at("results").at("quasiregular").at("status") == "not_applicable");

  const Json module = verify_structure(load_structure(lnr::testing::fixture("z4_on_z2.json")), "k_plus_i");
  CHECK(module.at("status") == kPass);
}
