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

// Modules over right loop near-rings and their substructures.
//
// Substructures are extensional: an ElementSet plus a predicate. A left
// N-submodule is a normal subloop K with n(a+k)+K = na+K for all n, a, k;
// a left N-subloop is a subloop I with NI in I. Right-hand versions use
// KM in K and IM in I.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lnr/core.hpp"
#include "lnr/loop.hpp"
#include "lnr/near_ring.hpp"

namespace lnr {

/// A loop G with a left action N x G -> G, (n, a) -> na. The action table
/// has one row per near-ring element.
class LeftModule {
 public:
  /// Checks m(na) = (mn)a, (m+n)a = ma+na and, for unital N with |N| > 1,
  /// 1a = a. Throws Errc::action_law_violated with the witness triple.
  static LeftModule create(LoopNearRing ring, FiniteLoop carrier, Table action);
  /// N acting on itself by multiplication.
  static LeftModule regular(const LoopNearRing& ring);
  /// G over the trivial near-ring, 0a = 0. Its submodules and subloops are
  /// exactly the normal subloops and subloops of G.
  static LeftModule trivial(FiniteLoop carrier);
  /// M(G) or M0(G) acting on G by evaluation.
  static LeftModule of_maps(const FiniteLoop& g, bool zero_fixing,
                            std::size_t max_elements = kDefaultMapNearRingCap);

  const LoopNearRing& ring() const noexcept { return ring_; }
  const FiniteLoop& carrier() const noexcept { return carrier_; }
  const Table& action() const noexcept { return action_; }
  Element act(Element n, Element a) const { return action_(n, a); }
  std::size_t order() const noexcept { return carrier_.order(); }

  friend bool operator==(const LeftModule&, const LeftModule&) = default;

 private:
  LeftModule(LoopNearRing ring, FiniteLoop carrier, Table action)
      : ring_(std::move(ring)), carrier_(std::move(carrier)), action_(std::move(action)) {}

  LoopNearRing ring_;
  FiniteLoop carrier_;
  Table action_;
};

/// A loop G with a right action G x M -> G, (a, m) -> am. The action table
/// has one row per carrier element.
class RightModule {
 public:
  /// Checks a(nm) = (an)m, (a+b)n = an+bn and a1 = a. Throws
  /// Errc::action_law_violated.
  static RightModule create(LoopNearRing ring, FiniteLoop carrier, Table action);
  static RightModule regular(const LoopNearRing& ring);

  const LoopNearRing& ring() const noexcept { return ring_; }
  const FiniteLoop& carrier() const noexcept { return carrier_; }
  const Table& action() const noexcept { return action_; }
  Element act(Element a, Element m) const { return action_(a, m); }
  std::size_t order() const noexcept { return carrier_.order(); }

  friend bool operator==(const RightModule&, const RightModule&) = default;

 private:
  RightModule(LoopNearRing ring, FiniteLoop carrier, Table action)
      : ring_(std::move(ring)), carrier_(std::move(carrier)), action_(std::move(action)) {}

  LoopNearRing ring_;
  FiniteLoop carrier_;
  Table action_;
};

/// An (N, M)-bimodule. A missing side stands for the trivial near-ring.
class Bimodule {
 public:
  /// Requires equal carriers and (na)m = n(am). Throws
  /// Errc::action_law_violated.
  static Bimodule create(std::optional<LeftModule> left, std::optional<RightModule> right);
  static Bimodule regular(const LoopNearRing& ring);

  const std::optional<LeftModule>& left() const noexcept { return left_; }
  const std::optional<RightModule>& right() const noexcept { return right_; }
  const FiniteLoop& carrier() const;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;

 private:
  Bimodule() = default;
  std::optional<LeftModule> left_;
  std::optional<RightModule> right_;
};

std::optional<Witness> left_action_violation(const LoopNearRing& ring, const FiniteLoop& carrier,
                                             const Table& action);
std::optional<Witness> right_action_violation(const LoopNearRing& ring, const FiniteLoop& carrier,
                                              const Table& action);

bool is_left_submodule(const LeftModule& m, const ElementSet& k);
bool is_left_subloop(const LeftModule& m, const ElementSet& i);

/// How the right-submodule condition is read. The action-consistent form
/// is KM in K. `with_left_closure` additionally demands NK in K from the
/// left action of a bimodule.
enum class RightSubmoduleReading { action_consistent, with_left_closure };

bool is_right_submodule(const RightModule& m, const ElementSet& k);
bool is_right_submodule(const Bimodule& g, const ElementSet& k,
                        RightSubmoduleReading reading = RightSubmoduleReading::action_consistent);
bool is_right_subloop(const RightModule& m, const ElementSet& i);

bool is_left_ideal(const LoopNearRing& n, const ElementSet& j);
bool is_right_ideal(const LoopNearRing& n, const ElementSet& j);
/// Two-sided: an (N, N)-submodule of N.
bool is_ideal(const LoopNearRing& n, const ElementSet& j);

std::vector<ElementSet> left_subloops(const LeftModule& m);
std::vector<ElementSet> left_submodules(const LeftModule& m);
std::vector<ElementSet> right_subloops(const RightModule& m);
std::vector<ElementSet> right_submodules(const RightModule& m);
std::vector<ElementSet> left_ideals(const LoopNearRing& n);
std::vector<ElementSet> ideals(const LoopNearRing& n);

struct ModuleQuotient {
  LeftModule module;
  ElementMap projection;
  ElementMap representatives;
};

/// n(a+K) = na + K. Throws Errc::not_a_submodule.
ModuleQuotient quotient_module(const LeftModule& m, const ElementSet& k);

/// The left N-subloop `i` as a module in its own right; elements are
/// renumbered in increasing order and `embedding` maps them back.
struct SubmoduleView {
  LeftModule module;
  ElementMap embedding;
};
SubmoduleView restrict_to(const LeftModule& m, const ElementSet& i);

/// First violation of phi(a+b) = phi(a)+phi(b) or phi(na) = n phi(a).
/// Both modules must be over the same near-ring.
std::optional<Witness> module_hom_violation(const LeftModule& domain, const LeftModule& codomain,
                                            std::span<const Element> map);
inline bool is_module_hom(const LeftModule& domain, const LeftModule& codomain,
                          std::span<const Element> map) {
  return !module_hom_violation(domain, codomain, map);
}
/// Throws Errc::not_a_homomorphism; also asserts that the kernel is a left
/// N-submodule and the image a left N-subloop.
void require_module_hom(const LeftModule& domain, const LeftModule& codomain,
                        std::span<const Element> map);

/// phi_b : N -> G, n -> nb, a homomorphism from the regular module.
ElementMap orbit_map(const LeftModule& m, Element b);

/// (A:B) = {n in N : nB in A}.
ElementSet colon(const LeftModule& m, const ElementSet& a, const ElementSet& b);
/// Ann(B) = (0:B).
ElementSet annihilator(const LeftModule& m, const ElementSet& b);

enum class SubstructureKind {
  subloop,
  normal_subloop,
  left_subloop,
  left_submodule,
  right_subloop,
  right_submodule,
};
std::string_view to_string(SubstructureKind kind);

bool satisfies(const LeftModule& m, const ElementSet& s, SubstructureKind kind);
bool satisfies(const RightModule& m, const ElementSet& s, SubstructureKind kind);

/// Bitwise intersection of a family of substructures of one kind; the empty
/// family gives the whole carrier. Throws Errc::precondition_violated if an
/// input fails the kind's predicate, or if a left kind is given for a right
/// module (and vice versa).
ElementSet intersect_substructures(const LeftModule& m, std::span<const ElementSet> family,
                                   SubstructureKind kind);
ElementSet intersect_substructures(const RightModule& m, std::span<const ElementSet> family,
                                   SubstructureKind kind);

struct CorrespondencePair {
  ElementSet in_image;   // substructure of im(phi), in codomain indices
  ElementSet in_domain;  // its preimage, a substructure containing ker(phi)
};

struct CorrespondenceReport {
  ElementSet kernel;
  ElementSet image;
  /// G/ker(phi) -> im(phi) is a bijective module homomorphism.
  bool induced_isomorphism = false;
  std::vector<CorrespondencePair> subloop_pairs;
  std::vector<CorrespondencePair> submodule_pairs;
  bool subloops_biject = false;
  bool submodules_biject = false;
  std::vector<std::string> problems;

  bool ok() const { return induced_isomorphism && subloops_biject && submodules_biject; }
};

/// Checks that phi induces G/ker(phi) = im(phi) and that left N-subloops
/// (resp. submodules) of im(phi) correspond to those of G containing
/// ker(phi) under preimage. Throws Errc::not_a_homomorphism.
CorrespondenceReport check_correspondence(const LeftModule& domain, const LeftModule& codomain,
                                          std::span<const Element> map);

struct SumReport {
  ElementSet k_plus_i;
  ElementSet i_plus_k;
  ElementSet preimage;  // phi^-1(phi(I)) for the projection phi : G -> G/K
  bool commute = false;
  bool sum_is_left_subloop = false;
  bool equals_preimage = false;

  bool ok() const { return commute && sum_is_left_subloop && equals_preimage; }
};

/// K a left N-submodule, I a left N-subloop. Throws
/// Errc::precondition_violated otherwise.
SumReport check_k_plus_i(const LeftModule& m, const ElementSet& k, const ElementSet& i);

}  // namespace lnr
