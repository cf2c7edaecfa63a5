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

#include "lnr/radical.hpp"

#include <algorithm>

namespace lnr {

namespace {

bool radical_domain(const LoopNearRing& n) {
  return n.order() >= 2 && n.unital() && n.zero_symmetric();
}

bool has_left_inverse(const LoopNearRing& n, Element y) {
  const Element one = n.one();
  for (Element l = 0; l < n.order(); ++l) {
    if (n.mul(l, y) == one) return true;
  }
  return false;
}

}  // namespace

void require_radical_domain(const LoopNearRing& n) {
  if (n.order() < 2) {
    throw Error(Errc::precondition_violated, "radicals need a near-ring with at least two elements");
  }
  if (!n.unital()) throw Error(Errc::precondition_violated, "near-ring is not unital");
  if (!n.zero_symmetric()) throw Error(Errc::precondition_violated, "near-ring is not zero-symmetric");
}

std::vector<ElementSet> maximal_left_subloops(const LoopNearRing& n) {
  require_radical_domain(n);
  const auto lattice = left_subloops(LeftModule::regular(n));
  return maximal_proper(lattice, n.additive().all());
}

std::vector<ElementSet> n_maximal_left_ideals(const LoopNearRing& n) {
  std::vector<ElementSet> out;
  for (auto& k : maximal_left_subloops(n)) {
    if (is_left_ideal(n, k)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<ElementSet> maximal_left_ideals(const LoopNearRing& n) {
  require_radical_domain(n);
  return maximal_proper(left_ideals(n), n.additive().all());
}

RadicalReport radicals(const LoopNearRing& n) {
  require_radical_domain(n);
  const LeftModule regular = LeftModule::regular(n);
  const ElementSet whole = n.additive().all();

  RadicalReport rep;
  rep.maximal_left_subloops = maximal_proper(left_subloops(regular), whole);
  for (const auto& k : rep.maximal_left_subloops) {
    if (is_left_ideal(n, k)) rep.n_maximal_left_ideals.push_back(k);
  }
  rep.maximal_left_ideals = maximal_proper(left_ideals(n), whole);

  rep.R = intersect_all(n.order(), rep.maximal_left_subloops);
  rep.j2_is_whole = rep.n_maximal_left_ideals.empty();
  rep.J2 = intersect_all(n.order(), rep.n_maximal_left_ideals);
  rep.D = intersect_all(n.order(), rep.maximal_left_ideals);

  std::vector<ElementSet> colons;
  for (const auto& k : rep.maximal_left_ideals) colons.push_back(colon(regular, k, whole));
  rep.J0 = intersect_all(n.order(), colons);

  std::vector<ElementSet> anns;
  for (const auto& k : rep.n_maximal_left_ideals) {
    const ModuleQuotient q = quotient_module(regular, k);
    anns.push_back(annihilator(q.module, q.module.carrier().all()));
  }
  rep.J2_by_annihilators = intersect_all(n.order(), anns);
  return rep;
}

bool is_quasiregular(const LoopNearRing& n, Element q) {
  const Element y = n.additive().right_difference(n.one(), q);
  return has_left_inverse(n, y);
}

bool is_quasiregular(const LoopNearRing& n, const ElementSet& q) {
  bool ok = true;
  q.for_each([&](Element x) { ok = ok && is_quasiregular(n, x); });
  return ok;
}

QuasiregularChecks quasiregular_closure_checks(const LoopNearRing& n) {
  require_radical_domain(n);
  QuasiregularChecks rep;
  for (Element e : idempotents(n)) {
    if (is_quasiregular(n, e)) rep.quasiregular_idempotents.push_back(e);
  }
  rep.only_zero_idempotent =
      rep.quasiregular_idempotents.size() == 1 && rep.quasiregular_idempotents[0] == 0;
  if (!rep.only_zero_idempotent) {
    rep.problems.push_back("quasiregular idempotents are not exactly {0}");
  }

  const ElementSet r = radicals(n).R;
  const UnitRecord u = units(n);
  rep.ideals_inside_r = true;
  rep.y_two_sided_units = true;
  for (auto& q : left_ideals(n)) {
    if (!is_quasiregular(n, q)) continue;
    if (!q.is_subset_of(r)) {
      rep.ideals_inside_r = false;
      rep.problems.push_back("quasiregular left ideal " + q.to_string() + " is not inside R");
    }
    q.for_each([&](Element x) {
      const Element y = n.additive().right_difference(n.one(), x);
      if (!u.units.contains(y)) {
        rep.y_two_sided_units = false;
        rep.problems.push_back("1/q is not a unit for q = " + std::to_string(x));
        return;
      }
      // Every left inverse must be the two-sided inverse.
      for (Element l : u.left_inverses[y]) {
        if (l != *u.inverse[y]) {
          rep.y_two_sided_units = false;
          rep.problems.push_back("left inverse of 1/q differs from its inverse for q = " +
                                 std::to_string(x));
        }
      }
    });
    rep.quasiregular_left_ideals.push_back(std::move(q));
  }
  return rep;
}

bool is_N_simple(const LeftModule& m) {
  if (m.order() < 2) throw Error(Errc::trivial_module, "module has a single element");
  return left_subloops(m).size() == 2;
}

ElementSet orbit(const LeftModule& m, Element a) {
  ElementSet out(m.order());
  for (Element n = 0; n < m.ring().order(); ++n) out.insert(m.act(n, a));
  return out;
}

std::optional<Element> local_hom_violation(const LoopNearRing& domain, const LoopNearRing& codomain,
                                           std::span<const Element> map) {
  if (auto w = nr_hom_violation(domain, codomain, map)) {
    throw Error(Errc::not_a_homomorphism, "map is not a near-ring homomorphism", *w);
  }
  const ElementSet source_units = units(domain).units;
  const ElementSet target_units = units(codomain).units;
  for (Element u = 0; u < domain.order(); ++u) {
    if (target_units.contains(map[u]) && !source_units.contains(u)) return u;
  }
  return std::nullopt;
}

KernelTheoremReport check_local_hom_kernel_theorem(const LoopNearRing& n) {
  require_radical_domain(n);
  KernelTheoremReport rep;
  for (auto& q : ideals(n)) {
    const NearRingQuotient quotient = quotient_near_ring(n, q);
    KernelTheoremEntry e;
    e.quasiregular = is_quasiregular(n, q);
    e.witness = local_hom_violation(n, quotient.ring, quotient.projection);
    e.quotient_local = !e.witness;
    if (e.quasiregular != e.quotient_local) {
      rep.problems.push_back("ideal " + q.to_string() + ": quasiregular=" +
                             (e.quasiregular ? "true" : "false") +
                             " but quotient local=" + (e.quotient_local ? "true" : "false"));
    }
    e.ideal = std::move(q);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool check_kernel_of_local_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                               std::span<const Element> map) {
  if (!is_local_hom(domain, codomain, map)) return true;
  const ElementSet k = kernel(map);
  return is_ideal(domain, k) && is_quasiregular(domain, k);
}

LocalnessReport localness(const LoopNearRing& n) {
  require_radical_domain(n);
  LocalnessReport rep;
  rep.radicals = radicals(n);
  const RadicalReport& rad = rep.radicals;
  rep.j2_is_whole = rad.j2_is_whole;

  const UnitRecord u = units(n);
  rep.non_units = u.units.complement();

  auto& c = rep.conditions;
  c[0] = rad.maximal_left_subloops.size() == 1;
  c[1] = rad.n_maximal_left_ideals.size() == 1 && is_quasiregular(n, rad.n_maximal_left_ideals[0]);
  if (!rad.j2_is_whole && is_ideal(n, rad.J2) && is_quasiregular(n, rad.J2)) {
    const NearRingQuotient q = quotient_near_ring(n, rad.J2);
    c[2] = q.ring.order() >= 2 && is_near_field(q.ring);
  }
  c[3] = is_ideal(n, rep.non_units);
  c[4] = is_subloop(n.additive(), rep.non_units);
  c[5] = true;
  for (Element a = 0; a < n.order() && c[5]; ++a) {
    for (Element b = 0; b < n.order() && c[5]; ++b) {
      if (u.units.contains(n.add(a, b)) && !u.units.contains(a) && !u.units.contains(b)) {
        c[5] = false;
      }
    }
  }
  rep.equivalent = std::all_of(c.begin(), c.end(), [&](bool x) { return x == c[0]; });
  if (!rad.j2_is_whole && !rep.equivalent) {
    std::string flags;
    for (bool x : c) flags += x ? 'T' : 'F';
    rep.problems.push_back("conditions (a)-(f) disagree: " + flags);
  }

  rep.local = c[0];
  if (!rep.local) return rep;

  const ElementSet& m = rad.maximal_left_subloops[0];
  rep.m = m;
  rep.m_equals_radicals = m == rad.R && m == rad.J2 && m == rad.J0 && m == rad.D && m == rep.non_units;
  if (!rep.m_equals_radicals) {
    rep.problems.push_back("m = R = J2 = J0 = D = N\\U fails for m = " + m.to_string());
  }
  ElementSet joined = m;
  joined |= u.units;
  rep.disjoint_union = !m.intersects(u.units) && joined == n.additive().all();
  if (!rep.disjoint_union) rep.problems.push_back("N is not the disjoint union of m and U(N)");

  rep.idempotents_trivial = true;
  for (Element e : idempotents(n)) {
    if (e != 0 && e != n.one()) {
      rep.idempotents_trivial = false;
      rep.problems.push_back("nontrivial idempotent " + std::to_string(e) + " in a local near-ring");
    }
  }
  rep.m_has_no_right_invertible = true;
  m.for_each([&](Element x) {
    if (!u.right_inverses[x].empty()) {
      rep.m_has_no_right_invertible = false;
      rep.problems.push_back("element " + std::to_string(x) + " of m has a right inverse");
    }
  });
  return rep;
}

TransferReport check_local_transfer(const LoopNearRing& domain, const LoopNearRing& codomain,
                                    std::span<const Element> map) {
  TransferReport rep;
  rep.hom_local = is_local_hom(domain, codomain, map);
  rep.codomain_ring = codomain.is_ring() && codomain.order() >= 2;

  std::optional<LocalnessReport> dom;
  if (radical_domain(domain)) {
    dom = localness(domain);
    rep.domain_local = dom->local;
    rep.domain_j2_proper = !dom->j2_is_whole;
  }
  if (radical_domain(codomain)) {
    const LocalnessReport cod = localness(codomain);
    rep.codomain_local = cod.local;
    rep.codomain_j2_proper = !cod.j2_is_whole;
  }
  if (!dom) return rep;

  if (rep.hom_local && rep.codomain_local && rep.domain_j2_proper && rep.codomain_j2_proper) {
    rep.applied.push_back("local transfer");
    if (!rep.domain_local) rep.problems.push_back("domain is not local although the codomain is");
  }
  if (rep.codomain_ring) {
    rep.applied.push_back("ring codomain");
    if (!rep.domain_j2_proper) rep.problems.push_back("J2 of the domain is the whole near-ring");
  }
  if (rep.codomain_ring && rep.hom_local && rep.codomain_local) {
    rep.applied.push_back("division ring quotient");
    if (!rep.domain_local) rep.problems.push_back("domain is not local over a local ring");
    const ElementSet& j2 = dom->radicals.J2;
    if (!dom->j2_is_whole && is_ideal(domain, j2)) {
      const NearRingQuotient q = quotient_near_ring(domain, j2);
      rep.quotient_division_ring = q.ring.order() >= 2 && is_division_ring(q.ring);
    } else {
      rep.quotient_division_ring = false;
    }
    if (!*rep.quotient_division_ring) rep.problems.push_back("N/J2 is not a division ring");
  }
  return rep;
}

}  // namespace lnr
