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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lnr/core.hpp"
#include "lnr/loop.hpp"

namespace lnr {

/// A finite right loop near-ring: (N,+) is a loop, (N,.) a semigroup, and
/// (m1+m2)n = m1 n + m2 n. Flags are computed once at construction.
class LoopNearRing {
 public:
  /// Exhaustively validates associativity and right distributivity and
  /// locates the identity. Throws Errc::not_associative,
  /// Errc::not_right_distributive, or Errc::no_identity (only when
  /// `require_unital`), each with a witness triple.
  static LoopNearRing from_parts(FiniteLoop additive, Table mul, bool require_unital = false);
  static LoopNearRing from_tables(Table add, Table mul, bool require_unital = false);

  /// The ring Z/n.
  static LoopNearRing integers_mod(std::size_t n);
  /// Componentwise product; element (a, b) has index a * |rhs| + b.
  static LoopNearRing product(const LoopNearRing& lhs, const LoopNearRing& rhs);

  std::size_t order() const noexcept { return additive_.order(); }
  const FiniteLoop& additive() const noexcept { return additive_; }
  const Table& mul_table() const noexcept { return mul_; }
  Element add(Element a, Element b) const { return additive_.add(a, b); }
  Element mul(Element a, Element b) const { return mul_(a, b); }

  std::optional<Element> identity() const noexcept { return identity_; }
  /// The identity; throws Errc::not_unital.
  Element one() const;
  bool unital() const noexcept { return identity_.has_value(); }
  bool zero_symmetric() const noexcept { return zero_symmetric_; }
  bool left_distributive() const noexcept { return left_distributive_; }
  /// Abelian group addition plus both distributive laws.
  bool is_ring() const noexcept {
    return additive_.associative() && additive_.commutative() && left_distributive_;
  }

  friend bool operator==(const LoopNearRing& a, const LoopNearRing& b) {
    return a.additive_ == b.additive_ && a.mul_ == b.mul_;
  }

 private:
  LoopNearRing(FiniteLoop additive) : additive_(std::move(additive)) {}

  FiniteLoop additive_;
  Table mul_;
  std::optional<Element> identity_;
  bool zero_symmetric_ = false;
  bool left_distributive_ = false;
};

/// First violated near-ring law, or nullopt. Checks associativity, right
/// distributivity, and the derived identities 0n = 0 and
/// (m1 \ m2)n = m1n \ m2n, (m1 / m2)n = m1n / m2n.
std::optional<Error> near_ring_violation(const FiniteLoop& additive, const Table& mul);

/// N0 = {y : y0 = 0}.
ElementSet zero_symmetric_part(const LoopNearRing& n);
/// Nc = {n0 : n in N}.
ElementSet constant_part(const LoopNearRing& n);

struct UnitRecord {
  ElementSet units;
  std::vector<std::optional<Element>> inverse;  // defined exactly on units
  std::vector<std::vector<Element>> left_inverses;   // all l with l*y = 1
  std::vector<std::vector<Element>> right_inverses;  // all r with y*r = 1
};

/// Throws Errc::not_unital.
UnitRecord units(const LoopNearRing& n);
/// Units are exactly the nonzero elements. Throws Errc::not_unital.
bool is_near_field(const LoopNearRing& n);
/// Near-field whose addition is an abelian group and which is left
/// distributive.
bool is_division_ring(const LoopNearRing& n);

std::vector<Element> idempotents(const LoopNearRing& n);

/// All self-maps of G (or those fixing 0) as value vectors, in
/// lexicographic order.
std::vector<ElementMap> self_maps(const FiniteLoop& g, bool zero_fixing);

/// Default cap on the number of elements of M(G) / M0(G): admits M(G) for
/// |G| <= 3 and M0(G) for |G| <= 4.
inline constexpr std::size_t kDefaultMapNearRingCap = 64;

/// M(G): all self-maps of G, pointwise addition, (f.g)(x) = f(g(x)).
/// Elements are ordered lexicographically by value vector. Throws
/// Errc::size_cap_exceeded when |G|^|G| exceeds `max_elements`.
LoopNearRing transformation_near_ring(const FiniteLoop& g,
                                      std::size_t max_elements = kDefaultMapNearRingCap);
/// M0(G): the maps fixing 0, same conventions as M(G).
LoopNearRing transformation_near_ring_zero(const FiniteLoop& g,
                                           std::size_t max_elements = kDefaultMapNearRingCap);

/// First violation of additivity, multiplicativity, or (when both sides
/// are unital) psi(1) = 1.
std::optional<Witness> nr_hom_violation(const LoopNearRing& domain, const LoopNearRing& codomain,
                                        std::span<const Element> map);
inline bool is_nr_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                      std::span<const Element> map) {
  return !nr_hom_violation(domain, codomain, map);
}
/// Kernel of a validated near-ring homomorphism. Throws
/// Errc::not_a_homomorphism; asserts the kernel is an ideal.
ElementSet nr_kernel(const LoopNearRing& domain, const LoopNearRing& codomain,
                     std::span<const Element> map);

/// Every near-ring homomorphism domain -> codomain (unital rule applied).
void for_each_nr_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                     const std::function<bool(const ElementMap&)>& visit);

struct NearRingQuotient {
  LoopNearRing ring;
  ElementMap projection;
  ElementMap representatives;
};

/// (n+J)(m+J) = nm + J. Throws Errc::not_an_ideal.
NearRingQuotient quotient_near_ring(const LoopNearRing& n, const ElementSet& j);

}  // namespace lnr
