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

#include "lnr/suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "lnr/census.hpp"
#include "lnr/radical.hpp"
#include "lnr/report.hpp"

namespace lnr {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr std::size_t kAllSubsetsMaxOrder = 8;

struct Outcome {
  bool applicable = true;
  std::string reason;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Json> failures;

  void expect(bool ok, const std::function<Json()>& witness) {
    ++checks;
    if (ok) return;
    if (failures.size() < kKeptFailures) failures.push_back(witness());
    ++failure_count;
  }

  void not_applicable(std::string why) {
    applicable = false;
    reason = std::move(why);
  }
};

using SuiteFn = void (*)(const NamedStructure&, Outcome&);

// ---------------------------------------------------------------------------
// Views of a structure as a module or a near-ring.

std::optional<LeftModule> left_view(const Structure& s) {
  if (auto* g = std::get_if<FiniteLoop>(&s)) return LeftModule::trivial(*g);
  if (auto* n = std::get_if<LoopNearRing>(&s)) return LeftModule::regular(*n);
  if (auto* m = std::get_if<LeftModule>(&s)) return *m;
  return std::get<Bimodule>(s).left();
}

std::optional<RightModule> right_view(const Structure& s) {
  if (auto* n = std::get_if<LoopNearRing>(&s)) return RightModule::regular(*n);
  if (auto* b = std::get_if<Bimodule>(&s)) return b->right();
  return std::nullopt;
}

const LoopNearRing* radical_view(const Structure& s, Outcome& out) {
  const auto* n = std::get_if<LoopNearRing>(&s);
  if (n == nullptr) {
    out.not_applicable("not a near-ring");
    return nullptr;
  }
  if (n->order() < 2 || !n->unital() || !n->zero_symmetric()) {
    out.not_applicable("not a unital, zero-symmetric near-ring of order >= 2");
    return nullptr;
  }
  return n;
}

Json set_witness(const char* law, const ElementSet& s) { return {{"law", law}, {"set", to_json(s)}}; }

Json pair_witness(const char* law, const ElementSet& a, const ElementSet& b) {
  return {{"law", law}, {"sets", Json::array({to_json(a), to_json(b)})}};
}

bool zero_preserving(const LeftModule& m) {
  for (Element n = 0; n < m.ring().order(); ++n) {
    if (m.act(n, 0) != 0) return false;
  }
  return true;
}

std::vector<ElementSet> lattice(const LeftModule& m, SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::subloop: return all_subloops(m.carrier());
    case SubstructureKind::normal_subloop: return all_normal_subloops(m.carrier());
    case SubstructureKind::left_subloop: return left_subloops(m);
    default: return left_submodules(m);
  }
}

constexpr SubstructureKind kLeftKinds[] = {SubstructureKind::subloop, SubstructureKind::normal_subloop,
                                           SubstructureKind::left_subloop,
                                           SubstructureKind::left_submodule};

// ---------------------------------------------------------------------------
// Near-ring homomorphisms used by the transfer and kernel suites.

Table poly_mul_table(unsigned modulus) {
  Table t(4, 4);
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      unsigned r = 0;
      for (unsigned i = 0; i < 2; ++i) {
        if ((b >> i) & 1u) r ^= a << i;
      }
      if (r & 4u) r ^= modulus;
      t(a, b) = r;
    }
  }
  return t;
}

const std::vector<LoopNearRing>& local_ring_targets() {
  static const std::vector<LoopNearRing> targets = [] {
    std::vector<LoopNearRing> out;
    for (std::size_t n : {2, 3, 4, 5}) out.push_back(LoopNearRing::integers_mod(n));
    Table xor_add(4, 4);
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = 0; b < 4; ++b) xor_add(a, b) = a ^ b;
    }
    out.push_back(LoopNearRing::from_tables(xor_add, poly_mul_table(0b111)));  // F4
    out.push_back(LoopNearRing::from_tables(xor_add, poly_mul_table(0b100)));  // Z2[x]/(x^2)
    return out;
  }();
  return targets;
}

struct Hom {
  std::string label;
  LoopNearRing codomain;
  ElementMap map;
};

std::vector<Hom> hom_family(const LoopNearRing& n) {
  std::vector<Hom> out;
  for (const auto& q : ideals(n)) {
    NearRingQuotient quotient = quotient_near_ring(n, q);
    out.push_back({"N -> N/" + q.to_string(), std::move(quotient.ring), std::move(quotient.projection)});
  }
  const auto& targets = local_ring_targets();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for_each_nr_hom(n, targets[t], [&](const ElementMap& map) {
      out.push_back({"N -> local ring #" + std::to_string(t), targets[t], map});
      return true;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

void substructures_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  const auto right = right_view(s.value);
  if (left) {
    const LeftModule& m = *left;
    const bool zero_fixed = zero_preserving(m);
    for (const auto& k : left_submodules(m)) {
      out.expect(is_normal_subloop(m.carrier(), k), [&] { return set_witness("K normal", k); });
      const ModuleQuotient q = quotient_module(m, k);
      out.expect(kernel(q.projection) == k, [&] { return set_witness("ker(G -> G/K) = K", k); });
      out.expect(is_module_hom(m, q.module, q.projection),
                 [&] { return set_witness("G -> G/K is a module homomorphism", k); });
      if (zero_fixed) {
        out.expect(is_left_subloop(m, k), [&] { return set_witness("K is a left N-subloop", k); });
      }
    }
    const LeftModule regular = LeftModule::regular(m.ring());
    for (Element b = 0; b < m.order(); ++b) {
      const ElementMap phi = orbit_map(m, b);
      out.expect(is_module_hom(regular, m, phi), [&] {
        return Json{{"law", "n -> nb is a module homomorphism"}, {"b", b}};
      });
      const ElementSet k = kernel(phi);
      out.expect(is_left_ideal(m.ring(), k), [&] { return set_witness("ker(n -> nb) is a left ideal", k); });
      const ElementSet i = image(m.carrier(), phi);
      out.expect(is_left_subloop(m, i), [&] { return set_witness("Nb is a left N-subloop", i); });
    }
    if (std::holds_alternative<FiniteLoop>(s.value)) {
      out.expect(left_submodules(m) == all_normal_subloops(m.carrier()),
                 [] { return Json{{"law", "trivial module: submodules = normal subloops"}}; });
      out.expect(left_subloops(m) == all_subloops(m.carrier()),
                 [] { return Json{{"law", "trivial module: N-subloops = subloops"}}; });
    }
  }
  if (right) {
    for (const auto& k : right_submodules(*right)) {
      out.expect(is_normal_subloop(right->carrier(), k) && is_right_subloop(*right, k),
                 [&] { return set_witness("right submodule is a normal right N-subloop", k); });
    }
    for (const auto& i : right_subloops(*right)) {
      out.expect(is_subloop(right->carrier(), i), [&] { return set_witness("right N-subloop", i); });
    }
  }
  if (!left && !right) out.not_applicable("no module structure");
}

void correspondence_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  if (!left) return out.not_applicable("no left module structure");
  const LeftModule& m = *left;
  auto record = [&](const CorrespondenceReport& r, const std::string& what) {
    out.expect(r.ok(), [&] { return Json{{"law", "correspondence"}, {"map", what}, {"problems", r.problems}}; });
  };
  for (const auto& k : left_submodules(m)) {
    const ModuleQuotient q = quotient_module(m, k);
    record(check_correspondence(m, q.module, q.projection), "G -> G/" + k.to_string());
  }
  const LeftModule regular = LeftModule::regular(m.ring());
  for (Element b = 0; b < m.order(); ++b) {
    record(check_correspondence(regular, m, orbit_map(m, b)), "n -> n" + std::to_string(b));
  }
}

void k_plus_i_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  if (!left) return out.not_applicable("no left module structure");
  const auto subloops = left_subloops(*left);
  for (const auto& k : left_submodules(*left)) {
    for (const auto& i : subloops) {
      const SumReport r = check_k_plus_i(*left, k, i);
      out.expect(r.commute, [&] { return pair_witness("K+I = I+K", k, i); });
      out.expect(r.sum_is_left_subloop, [&] { return pair_witness("K+I is a left N-subloop", k, i); });
      out.expect(r.equals_preimage, [&] { return pair_witness("K+I = phi^-1(phi(I))", k, i); });
    }
  }
}

template <class Module>
void intersect_family(const Module& m, const std::vector<ElementSet>& family, SubstructureKind kind,
                      Outcome& out) {
  const std::string law = "intersection of " + std::string(to_string(kind)) + "s";
  auto attempt = [&](std::span<const ElementSet> sub) {
    bool ok = true;
    try {
      const ElementSet meet = intersect_substructures(m, sub, kind);
      ok = meet == intersect_all(m.order(), sub);
    } catch (const Error&) {
      ok = false;
    }
    out.expect(ok, [&] {
      Json sets = Json::array();
      for (const auto& x : sub) sets.push_back(to_json(x));
      return Json{{"law", law}, {"sets", sets}};
    });
  };
  attempt({});
  attempt(family);
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const ElementSet pair[] = {family[a], family[b]};
      attempt(pair);
    }
  }
}

void intersections_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  const auto right = right_view(s.value);
  if (left) {
    for (SubstructureKind kind : kLeftKinds) intersect_family(*left, lattice(*left, kind), kind, out);
  }
  if (right) {
    intersect_family(*right, right_subloops(*right), SubstructureKind::right_subloop, out);
    intersect_family(*right, right_submodules(*right), SubstructureKind::right_submodule, out);
  }
  if (!left && !right) out.not_applicable("no module structure");
}

std::vector<ElementSet> colon_denominators(const LeftModule& m) {
  std::vector<ElementSet> out;
  const std::size_t n = m.order();
  if (n <= kAllSubsetsMaxOrder) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      ElementSet b(n);
      for (Element x = 0; x < n; ++x) {
        if ((bits >> x) & 1u) b.insert(x);
      }
      out.push_back(std::move(b));
    }
    return out;
  }
  for (Element x = 0; x < n; ++x) out.push_back(ElementSet::singleton(n, x));
  for (auto& i : all_subloops(m.carrier())) out.push_back(std::move(i));
  return out;
}

void colon_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  if (!left) return out.not_applicable("no left module structure");
  const LeftModule& m = *left;
  const LeftModule regular = LeftModule::regular(m.ring());
  const auto denominators = colon_denominators(m);
  for (SubstructureKind kind : kLeftKinds) {
    for (const auto& a : lattice(m, kind)) {
      for (const auto& b : denominators) {
        const ElementSet c = colon(m, a, b);
        out.expect(satisfies(regular, c, kind), [&] {
          return Json{{"law", "(A:B) keeps the kind of A"},
                      {"kind", to_string(kind)},
                      {"A", to_json(a)},
                      {"B", to_json(b)},
                      {"colon", to_json(c)}};
        });
        std::vector<ElementSet> pieces;
        b.for_each([&](Element x) { pieces.push_back(colon(m, a, ElementSet::singleton(m.order(), x))); });
        out.expect(c == intersect_all(m.ring().order(), pieces),
                   [&] { return pair_witness("(A:B) = intersection of (A:b)", a, b); });
      }
    }
  }
}

void annihilator_suite(const NamedStructure& s, Outcome& out) {
  const auto left = left_view(s.value);
  if (!left) return out.not_applicable("no left module structure");
  const LeftModule& m = *left;
  const ElementSet whole = m.carrier().all();
  for (Element a = 0; a < m.order(); ++a) {
    const ElementSet ann = annihilator(m, ElementSet::singleton(m.order(), a));
    out.expect(is_left_ideal(m.ring(), ann), [&] {
      return Json{{"law", "Ann(a) is a left ideal"}, {"a", a}, {"set", to_json(ann)}};
    });
  }
  const ElementSet ann = annihilator(m, whole);
  out.expect(is_ideal(m.ring(), ann), [&] { return set_witness("Ann(G) is an ideal", ann); });
  for (const auto& k : left_submodules(m)) {
    const ElementSet c = colon(m, k, whole);
    out.expect(is_ideal(m.ring(), c), [&] { return pair_witness("(K:G) is an ideal", k, c); });
  }
}

void quasiregular_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  const RadicalReport r = radicals(*n);
  out.expect(is_quasiregular(*n, r.R), [&] { return set_witness("R(N) is quasiregular", r.R); });
  const QuasiregularChecks q = quasiregular_closure_checks(*n);
  out.expect(q.only_zero_idempotent, [&] {
    return Json{{"law", "0 is the unique quasiregular idempotent"}, {"idempotents", q.quasiregular_idempotents}};
  });
  out.expect(q.ideals_inside_r, [&] {
    return Json{{"law", "quasiregular left ideals lie in R(N)"}, {"problems", q.problems}};
  });
  out.expect(q.y_two_sided_units, [&] {
    return Json{{"law", "1/q is a unit for q in a quasiregular left ideal"}, {"problems", q.problems}};
  });
}

void radical_containments_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  const RadicalReport r = radicals(*n);
  const LeftModule regular = LeftModule::regular(*n);
  out.expect(!r.maximal_left_subloops.empty(), [] { return Json{{"law", "a maximal left N-subloop exists"}}; });
  out.expect(r.D.is_subset_of(r.R), [&] { return pair_witness("D(N) in R(N)", r.D, r.R); });
  out.expect(r.R.is_subset_of(r.J2), [&] { return pair_witness("R(N) in J2(N)", r.R, r.J2); });
  out.expect(is_left_subloop(regular, r.R) && r.R != n->additive().all(),
             [&] { return set_witness("R(N) is a proper left N-subloop", r.R); });
  out.expect(r.J2 == r.J2_by_annihilators,
             [&] { return pair_witness("J2(N) = intersection of Ann(N/K)", r.J2, r.J2_by_annihilators); });
  if (!r.j2_is_whole) {
    out.expect(is_ideal(*n, r.J2), [&] { return set_witness("J2(N) is an ideal", r.J2); });
  }
  if (n->is_ring()) {
    out.expect(r.R == r.J2 && r.J2 == r.J0 && r.J0 == r.D, [&] {
      return Json{{"law", "rings: R = J2 = J0 = D"},
                  {"R", to_json(r.R)},
                  {"J2", to_json(r.J2)},
                  {"J0", to_json(r.J0)},
                  {"D", to_json(r.D)}};
    });
  }
  for (const auto& k : r.n_maximal_left_ideals) {
    const ModuleQuotient q = quotient_module(regular, k);
    out.expect(is_N_simple(q.module), [&] { return set_witness("N/K is N-simple for N-maximal K", k); });
    for (Element a = 1; a < q.module.order(); ++a) {
      out.expect(orbit(q.module, a) == q.module.carrier().all(), [&] {
        return Json{{"law", "N-simple module is generated by any nonzero element"},
                    {"K", to_json(k)},
                    {"a", a}};
      });
    }
  }
}

void local_equivalence_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  const LocalnessReport l = localness(*n);
  if (l.j2_is_whole) return out.not_applicable("J2(N) = N");
  out.expect(l.equivalent, [&] { return Json{{"law", "(a)-(f) are equivalent"}, {"report", localness_json(l)}}; });
  if (l.local) {
    out.expect(l.m_equals_radicals, [&] { return Json{{"law", "m = R = J2 = J0 = D = N\\U"}, {"problems", l.problems}}; });
    out.expect(l.disjoint_union, [&] { return Json{{"law", "N = m disjoint-union U(N)"}, {"problems", l.problems}}; });
    out.expect(l.m_has_no_right_invertible,
               [&] { return Json{{"law", "m has no right-invertible element"}, {"problems", l.problems}}; });
  }
}

void local_transfer_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  for (const auto& h : hom_family(*n)) {
    const TransferReport r = check_local_transfer(*n, h.codomain, h.map);
    out.expect(r.ok(), [&] { return Json{{"law", "local transfer"}, {"map", h.label}, {"problems", r.problems}}; });
  }
}

void kernel_theorem_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  const KernelTheoremReport r = check_local_hom_kernel_theorem(*n);
  for (const auto& e : r.entries) {
    out.expect(e.quasiregular == e.quotient_local, [&] {
      return Json{{"law", "Q quasiregular iff N -> N/Q local"},
                  {"Q", to_json(e.ideal)},
                  {"quasiregular", e.quasiregular},
                  {"quotient_local", e.quotient_local}};
    });
  }
  for (const auto& h : hom_family(*n)) {
    out.expect(check_kernel_of_local_hom(*n, h.codomain, h.map), [&] {
      return Json{{"law", "kernel of a local homomorphism is a quasiregular ideal"}, {"map", h.label}};
    });
  }
}

void idempotents_suite(const NamedStructure& s, Outcome& out) {
  const LoopNearRing* n = radical_view(s.value, out);
  if (n == nullptr) return;
  std::vector<Element> quasi;
  for (Element e : idempotents(*n)) {
    if (is_quasiregular(*n, e)) quasi.push_back(e);
  }
  out.expect(quasi == std::vector<Element>{0}, [&] {
    return Json{{"law", "0 is the unique quasiregular idempotent"}, {"idempotents", quasi}};
  });
  const LocalnessReport l = localness(*n);
  if (l.local) {
    const auto ids = idempotents(*n);
    out.expect(std::all_of(ids.begin(), ids.end(), [&](Element e) { return e == 0 || e == n->one(); }),
               [&] { return Json{{"law", "idempotents of a local near-ring are 0 or 1"}, {"idempotents", ids}}; });
  }
}

struct SuiteEntry {
  std::string_view name;
  const char* statement;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"substructures", "kernels of module homomorphisms are left N-submodules, images are left N-subloops",
       substructures_suite},
      {"correspondence",
       "phi induces G/ker(phi) = im(phi) and a bijection of substructures containing ker(phi)",
       correspondence_suite},
      {"k_plus_i", "K+I = I+K = phi^-1(phi(I)) is a left N-subloop", k_plus_i_suite},
      {"intersections", "intersections of substructures are substructures of the same kind",
       intersections_suite},
      {"colon", "(A:B) is a substructure of N of the same kind as A", colon_suite},
      {"annihilator", "Ann(a) is a left ideal and Ann(G) is an ideal", annihilator_suite},
      {"quasiregular", "R(N) is quasiregular and 0 is the unique quasiregular idempotent",
       quasiregular_suite},
      {"radical_containments", "D(N) in R(N) in J2(N), and J2(N) is an intersection of annihilators",
       radical_containments_suite},
      {"local_equivalence", "conditions (a)-(f) are equivalent; m = R(N) = J2(N) = N\\U(N)",
       local_equivalence_suite},
      {"local_transfer", "a local homomorphism into a local near-ring reflects localness",
       local_transfer_suite},
      {"kernel_theorem", "Q is quasiregular iff N -> N/Q is local", kernel_theorem_suite},
      {"idempotents", "every idempotent of a local near-ring is 0 or 1", idempotents_suite},
  };
  return entries;
}

std::vector<const SuiteEntry*> select(std::string_view suite) {
  std::vector<const SuiteEntry*> out;
  for (const auto& e : registry()) {
    if (suite == "all" || e.name == suite) out.push_back(&e);
  }
  if (out.empty()) throw Error(Errc::unknown_suite, "unknown suite '" + std::string(suite) + "'");
  return out;
}

Outcome run_one(const SuiteEntry& e, const NamedStructure& s) {
  Outcome out;
  try {
    e.run(s, out);
  } catch (const Error& err) {
    out.expect(false, [&] { return Json{{"law", "suite raised"}, {"error", err.what()}}; });
  }
  return out;
}

const char* status_of(const Outcome& o) {
  if (!o.applicable) return "not_applicable";
  return o.failure_count == 0 ? kPass : kFail;
}

std::string overall(bool failed, bool skipped) {
  if (failed) return kFail;
  return skipped ? kPartial : kPass;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& e : registry()) out.push_back(e.name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Json verify_structure(const NamedStructure& s, std::string_view suite) {
  const auto chosen = select(suite);
  Json results = Json::object();
  bool failed = false, skipped = false;
  for (const SuiteEntry* e : chosen) {
    const Outcome o = run_one(*e, s);
    Json r = {{"statement", e->statement}, {"status", status_of(o)}};
    if (o.applicable) {
      r["checks"] = o.checks;
      r["failure_count"] = o.failure_count;
      r["failures"] = o.failures;
    } else {
      r["reason"] = o.reason;
    }
    failed = failed || o.failure_count > 0;
    skipped = skipped || !o.applicable;
    results[std::string(e->name)] = std::move(r);
  }
  return make_report(subject_json(s), overall(failed, skipped), std::move(results));
}

Json verify_corpus(const std::vector<NamedStructure>& corpus, std::string_view suite,
                   unsigned threads) {
  const auto chosen = select(suite);
  // outcomes[i][j]: suite j on structure i.
  std::vector<std::vector<std::optional<Outcome>>> outcomes(
      corpus.size(), std::vector<std::optional<Outcome>>(chosen.size()));
  std::vector<std::exception_ptr> errors(std::max(1u, threads));
  auto work = [&](std::size_t start, std::size_t stride) {
    try {
      for (std::size_t i = start; i < corpus.size(); i += stride) {
        for (std::size_t j = 0; j < chosen.size(); ++j) outcomes[i][j] = run_one(*chosen[j], corpus[i]);
      }
    } catch (...) {
      errors[start] = std::current_exception();
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, corpus.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Json results = Json::object();
  bool failed = false;
  std::string hashes;
  for (const auto& s : corpus) hashes += content_hash(s);
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    std::size_t checked = 0, skipped = 0, checks = 0, failure_count = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Outcome& o = *outcomes[i][j];
      if (!o.applicable) {
        ++skipped;
        continue;
      }
      ++checked;
      checks += o.checks;
      failure_count += o.failure_count;
      for (const auto& f : o.failures) {
        if (failures.size() < kKeptFailures) failures.push_back({{"structure", corpus[i].name}, {"witness", f}});
      }
    }
    failed = failed || failure_count > 0;
    results[std::string(chosen[j]->name)] = {{"statement", chosen[j]->statement},
                                             {"status", failure_count == 0 ? kPass : kFail},
                                             {"structures_checked", checked},
                                             {"not_applicable", skipped},
                                             {"checks", checks},
                                             {"failure_count", failure_count},
                                             {"failures", failures}};
  }
  Json subject = {{"name", "corpus"}, {"kind", "corpus"}, {"size", corpus.size()}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(hashes)));
  subject["hash"] = buf;
  return make_report(std::move(subject), overall(failed, false), std::move(results));
}

std::vector<NamedStructure> build_corpus(const CorpusOptions& options) {
  std::vector<NamedStructure> out;
  std::vector<NamedStructure> near_rings;

  for (std::size_t order = 1; order <= options.max_loop_order; ++order) {
    CensusQuery q;
    q.order = order;
    q.caps.max_loop_order = options.max_loop_order;
    std::size_t k = 0;
    enumerate_loops(q, [&](const FiniteLoop& g) {
      out.push_back({"loop" + std::to_string(order) + "." + std::to_string(++k), g});
      return true;
    });
  }
  for (std::size_t order = 2; order <= options.max_additive_order; ++order) {
    CensusQuery q;
    q.kind = CensusQuery::Kind::near_rings;
    q.order = order;
    q.filters.unital = true;
    q.filters.zero_symmetric = true;
    q.caps.max_loop_order = options.max_additive_order;
    q.caps.max_additive_order = options.max_additive_order;
    std::size_t k = 0;
    enumerate_near_rings(q, [&](const LoopNearRing& n) {
      near_rings.push_back({"nearring" + std::to_string(order) + "." + std::to_string(++k), n});
      return true;
    });
  }
  for (std::size_t g = 2; g <= 3; ++g) {
    const FiniteLoop z = FiniteLoop::cyclic(g);
    near_rings.push_back({"M0(Z" + std::to_string(g) + ")", transformation_near_ring_zero(z, options.map_cap)});
  }

  std::vector<NamedStructure> modules;
  for (const auto& s : near_rings) {
    const auto& n = std::get<LoopNearRing>(s.value);
    if (n.order() > options.max_quotient_order) continue;
    const LeftModule regular = LeftModule::regular(n);
    for (const auto& k : left_submodules(regular)) {
      if (k.size() == 1 || k.size() == n.order()) continue;
      modules.push_back({s.name + "/" + k.to_string(), quotient_module(regular, k).module});
    }
    if (n.order() <= 4) modules.push_back({s.name + " regular bimodule", Bimodule::regular(n)});
  }
  for (std::size_t g = 2; g <= 3; ++g) {
    const FiniteLoop z = FiniteLoop::cyclic(g);
    const std::string zn = "Z" + std::to_string(g);
    modules.push_back({"M0(" + zn + ") on " + zn, LeftModule::of_maps(z, true, options.map_cap)});
    modules.push_back({"M(" + zn + ") on " + zn, LeftModule::of_maps(z, false, options.map_cap)});
  }

  for (auto& s : near_rings) out.push_back(std::move(s));
  for (auto& s : modules) out.push_back(std::move(s));
  return out;
}

}  // namespace lnr
