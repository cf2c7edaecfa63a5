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

#include "lnr/report.hpp"

#include <algorithm>

namespace lnr {

namespace {

bool radical_domain(const LoopNearRing& n) {
  return n.order() >= 2 && n.unital() && n.zero_symmetric();
}

Json loop_facts(const FiniteLoop& g) {
  return {{"order", g.order()}, {"associative", g.associative()}, {"commutative", g.commutative()}};
}

Json near_ring_facts(const LoopNearRing& n) {
  Json j = loop_facts(n.additive());
  j["unital"] = n.unital();
  j["identity"] = n.identity() ? Json(*n.identity()) : Json(nullptr);
  j["zero_symmetric"] = n.zero_symmetric();
  j["left_distributive"] = n.left_distributive();
  j["ring"] = n.is_ring();
  j["genuine_loop"] = !n.additive().associative();
  return j;
}

Json left_module_facts(const LeftModule& m) {
  return {{"order", m.order()}, {"near_ring", near_ring_facts(m.ring())}};
}

Json not_applicable(const std::string& why) { return {{"not_applicable", why}}; }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& x) {
    return !x.is_object() && (!x.is_array() || std::all_of(x.begin(), x.end(), [](const Json& y) {
                                return y.is_primitive();
                              }));
  });
}

void render(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (is_flat(value)) {
        out += pad + key + ": " + scalar_text(value) + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 1, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (is_flat(item)) {
        out += pad + "- " + scalar_text(item) + "\n";
      } else {
        out += pad + "-\n";
        render(item, indent + 1, out);
      }
    }
  } else {
    out += pad + scalar_text(v) + "\n";
  }
}

}  // namespace

Json subject_json(const NamedStructure& s) {
  return {{"name", s.name}, {"kind", kind_name(s.value)}, {"hash", content_hash(s)}};
}

Json make_report(Json subject, const std::string& status, Json results) {
  return {{"subject", std::move(subject)}, {"status", status}, {"results", std::move(results)}};
}

Json failure_report(const std::string& name, const Error& e) {
  Json results = {{"error", to_string(e.code())}, {"message", e.what()}};
  if (e.witness()) results["witness"] = to_json(*e.witness());
  return make_report({{"name", name}}, kFail, std::move(results));
}

Json check_report(const NamedStructure& s) {
  Json facts = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteLoop>) {
          return loop_facts(x);
        } else if constexpr (std::is_same_v<T, LoopNearRing>) {
          return near_ring_facts(x);
        } else if constexpr (std::is_same_v<T, LeftModule>) {
          return left_module_facts(x);
        } else {
          Json j = {{"order", x.carrier().order()}};
          if (x.left()) j["left"] = left_module_facts(*x.left());
          if (x.right()) j["right"] = {{"near_ring", near_ring_facts(x.right()->ring())}};
          return j;
        }
      },
      s.value);
  facts["valid"] = true;
  return make_report(subject_json(s), kPass, std::move(facts));
}

Json analyze_report(const NamedStructure& s) {
  Json results = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteLoop>) {
          Json j = loop_facts(x);
          j["subloops"] = to_json(all_subloops(x));
          j["normal_subloops"] = to_json(all_normal_subloops(x));
          return j;
        } else if constexpr (std::is_same_v<T, LoopNearRing>) {
          Json j = near_ring_facts(x);
          j["zero_symmetric_part"] = to_json(zero_symmetric_part(x));
          j["constant_part"] = to_json(constant_part(x));
          j["idempotents"] = idempotents(x);
          if (x.unital()) {
            j["units"] = to_json(units(x).units);
            j["near_field"] = x.order() >= 2 && is_near_field(x);
            j["division_ring"] = x.order() >= 2 && is_division_ring(x);
          }
          j["left_subloops"] = to_json(left_subloops(LeftModule::regular(x)));
          j["left_ideals"] = to_json(left_ideals(x));
          j["ideals"] = to_json(ideals(x));
          return j;
        } else if constexpr (std::is_same_v<T, LeftModule>) {
          Json j = left_module_facts(x);
          j["left_subloops"] = to_json(left_subloops(x));
          j["left_submodules"] = to_json(left_submodules(x));
          return j;
        } else {
          Json j = {{"order", x.carrier().order()}};
          if (x.left()) {
            j["left_subloops"] = to_json(left_subloops(*x.left()));
            j["left_submodules"] = to_json(left_submodules(*x.left()));
          }
          if (x.right()) {
            j["right_subloops"] = to_json(right_subloops(*x.right()));
            j["right_submodules"] = to_json(right_submodules(*x.right()));
          }
          return j;
        }
      },
      s.value);
  return make_report(subject_json(s), kPass, std::move(results));
}

Json radicals_json(const RadicalReport& r) {
  return {{"maximal_left_subloops", to_json(r.maximal_left_subloops)},
          {"n_maximal_left_ideals", to_json(r.n_maximal_left_ideals)},
          {"maximal_left_ideals", to_json(r.maximal_left_ideals)},
          {"R", to_json(r.R)},
          {"J2", to_json(r.J2)},
          {"J0", to_json(r.J0)},
          {"D", to_json(r.D)},
          {"j2_is_whole", r.j2_is_whole},
          {"J2_by_annihilators", to_json(r.J2_by_annihilators)}};
}

Json localness_json(const LocalnessReport& l) {
  static constexpr const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
  Json conditions;
  for (std::size_t i = 0; i < 6; ++i) conditions[kNames[i]] = l.conditions[i];
  Json j = {{"local", l.local},
            {"conditions", conditions},
            {"conditions_agree", l.equivalent},
            {"j2_is_whole", l.j2_is_whole},
            {"non_units", to_json(l.non_units)},
            {"m", l.m ? to_json(*l.m) : Json(nullptr)},
            {"problems", l.problems}};
  if (l.local) {
    j["m_equals_radicals"] = l.m_equals_radicals;
    j["disjoint_union"] = l.disjoint_union;
    j["idempotents_trivial"] = l.idempotents_trivial;
    j["m_has_no_right_invertible"] = l.m_has_no_right_invertible;
  }
  return j;
}

Json radicals_report(const NamedStructure& s) {
  const auto* n = std::get_if<LoopNearRing>(&s.value);
  if (n == nullptr || !radical_domain(*n)) {
    return make_report(subject_json(s), kPartial,
                       not_applicable("needs a unital, zero-symmetric near-ring of order >= 2"));
  }
  return make_report(subject_json(s), kPass, radicals_json(radicals(*n)));
}

Json localness_report(const NamedStructure& s) {
  const auto* n = std::get_if<LoopNearRing>(&s.value);
  if (n == nullptr || !radical_domain(*n)) {
    return make_report(subject_json(s), kPartial,
                       not_applicable("needs a unital, zero-symmetric near-ring of order >= 2"));
  }
  const LocalnessReport l = localness(*n);
  return make_report(subject_json(s), l.ok() ? kPass : kFail, localness_json(l));
}

Json analysis_json(const SpecimenAnalysis& a) {
  Json j = {{"order", a.order},
            {"associative_add", a.associative_add},
            {"commutative_add", a.commutative_add},
            {"genuine_loop", a.genuine_loop},
            {"left_distributive", a.left_distributive},
            {"unital", a.unital},
            {"zero_symmetric", a.zero_symmetric},
            {"ring", a.ring}};
  if (a.near_field) j["near_field"] = *a.near_field;
  if (a.local) j["local"] = *a.local;
  if (a.m) j["m"] = to_json(*a.m);
  if (a.radicals) j["radicals"] = radicals_json(*a.radicals);
  return j;
}

Json specimen_json(const Specimen& s, const std::string& name) {
  Json j = std::visit(
      [&](const auto& x) { return structure_to_json(NamedStructure{name, x}); }, s.structure);
  Json a = analysis_json(s.analysis);
  if (std::holds_alternative<FiniteLoop>(s.structure)) {
    a = {{"order", s.analysis.order},
         {"associative", s.analysis.associative_add},
         {"commutative", s.analysis.commutative_add}};
  }
  j["analysis"] = std::move(a);
  return j;
}

std::string render_text(const Json& report) {
  std::string out;
  if (!report.is_object() || !report.contains("results")) {
    render(report, 0, out);
    return out;
  }
  Json head;
  for (const char* key : {"subject", "status"}) {
    if (report.contains(key)) head[key] = report[key];
  }
  render(head, 0, out);
  out += "results:\n";
  render(report["results"], 1, out);
  return out;
}

}  // namespace lnr
