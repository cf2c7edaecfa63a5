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

#pragma once

// Radicals, quasiregularity and localness of unital, zero-symmetric loop
// near-rings. Everything here is computed from the full substructure
// lattices, so it is only meant for small orders.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lnr/core.hpp"
#include "lnr/module.hpp"
#include "lnr/near_ring.hpp"

namespace lnr {

/// Throws Errc::precondition_violated unless N is unital, zero-symmetric
/// and has at least two elements.
void require_radical_domain(const LoopNearRing& n);

std::vector<ElementSet> maximal_left_subloops(const LoopNearRing& n);
/// Left ideals that are maximal as left N-subloops. May be empty.
std::vector<ElementSet> n_maximal_left_ideals(const LoopNearRing& n);
/// Left ideals maximal in the lattice of left ideals.
std::vector<ElementSet> maximal_left_ideals(const LoopNearRing& n);

struct RadicalReport {
  std::vector<ElementSet> maximal_left_subloops;
  std::vector<ElementSet> n_maximal_left_ideals;
  std::vector<ElementSet> maximal_left_ideals;
  ElementSet R;
  ElementSet J2;
  ElementSet J0;
  ElementSet D;
  /// No N-maximal left ideal exists, so J2 = N.
  bool j2_is_whole = false;
  /// Intersection of Ann(N/K) over the N-maximal left ideals K.
  ElementSet J2_by_annihilators;
};

RadicalReport radicals(const LoopNearRing& n);

/// y = 1 / q, the solution of y + q = 1, has a left inverse.
bool is_quasiregular(const LoopNearRing& n, Element q);
bool is_quasiregular(const LoopNearRing& n, const ElementSet& q);

struct QuasiregularChecks {
  std::vector<Element> quasiregular_idempotents;
  std::vector<ElementSet> quasiregular_left_ideals;
  bool only_zero_idempotent = false;
  bool ideals_inside_r = false;
  bool y_two_sided_units = false;
  std::vector<std::string> problems;

  bool ok() const { return only_zero_idempotent && ideals_inside_r && y_two_sided_units; }
};

QuasiregularChecks quasiregular_closure_checks(const LoopNearRing& n);

/// The only left N-subloops are {0} and G. Throws Errc::trivial_module for
/// a one-element carrier.
bool is_N_simple(const LeftModule& m);
/// Na = {na : n in N}.
ElementSet orbit(const LeftModule& m, Element a);

/// An element u with psi(u) a unit and u not a unit, if any. Throws
/// Errc::not_a_homomorphism, or Errc::not_unital if either side lacks 1.
std::optional<Element> local_hom_violation(const LoopNearRing& domain, const LoopNearRing& codomain,
                                           std::span<const Element> map);
inline bool is_local_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                         std::span<const Element> map) {
  return !local_hom_violation(domain, codomain, map);
}

struct KernelTheoremEntry {
  ElementSet ideal;
  bool quasiregular = false;
  bool quotient_local = false;
  std::optional<Element> witness;  // non-unit mapped to a unit, when not local
};

struct KernelTheoremReport {
  std::vector<KernelTheoremEntry> entries;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// For every two-sided ideal Q, the projection N -> N/Q is local exactly
/// when Q is quasiregular.
KernelTheoremReport check_local_hom_kernel_theorem(const LoopNearRing& n);
/// The kernel of a local homomorphism is a quasiregular ideal. Returns
/// false when `map` is local and its kernel is not.
bool check_kernel_of_local_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                               std::span<const Element> map);

struct LocalnessReport {
  /// (a) unique maximal left N-subloop; (b) unique N-maximal left ideal, and
  /// it is quasiregular; (c) J2 quasiregular and N/J2 a near-field; (d)
  /// N\U is an ideal; (e) N\U is a subloop; (f) m+n in U implies m or n in U.
  std::array<bool, 6> conditions{};
  bool local = false;
  std::optional<ElementSet> m;
  ElementSet non_units;
  bool j2_is_whole = false;
  /// All six conditions agree. Only asserted when J2 != N.
  bool equivalent = false;
  /// Facts that must hold in the local case; empty otherwise.
  bool m_equals_radicals = false;
  bool disjoint_union = false;
  bool idempotents_trivial = false;
  bool m_has_no_right_invertible = false;
  RadicalReport radicals;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

LocalnessReport localness(const LoopNearRing& n);

struct TransferReport {
  bool hom_local = false;
  bool codomain_local = false;
  bool codomain_ring = false;
  bool domain_local = false;
  bool domain_j2_proper = false;
  bool codomain_j2_proper = false;
  /// N/J2(N) is a division ring; only computed when the corollary applies.
  std::optional<bool> quotient_division_ring;
  std::vector<std::string> applied;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Checks the transfer of localness along psi : N -> M. Throws
/// Errc::not_a_homomorphism.
TransferReport check_local_transfer(const LoopNearRing& domain, const LoopNearRing& codomain,
                                    std::span<const Element> map);

}  // namespace lnr
