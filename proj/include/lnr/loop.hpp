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
#include <string>
#include <vector>

#include "lnr/core.hpp"

namespace lnr {

/// A finite loop given by its Cayley table. The table is a Latin square and
/// element 0 is the two-sided zero. Immutable once constructed.
class FiniteLoop {
 public:
  /// Validates `add` and builds the loop. Throws Errc::not_latin_square or
  /// Errc::no_two_sided_zero with a witness on failure.
  static FiniteLoop from_table(Table add, std::vector<std::string> labels = {});
  static FiniteLoop cyclic(std::size_t n);
  static FiniteLoop trivial() { return cyclic(1); }
  /// Direct product; element (a, b) has index a * |rhs| + b.
  static FiniteLoop product(const FiniteLoop& lhs, const FiniteLoop& rhs);

  std::size_t order() const noexcept { return add_.rows(); }
  Element add(Element a, Element b) const { return add_(a, b); }
  /// The unique x with a + x = b.
  Element left_difference(Element a, Element b) const { return ldiff_(a, b); }
  /// The unique y with y + a = b.
  Element right_difference(Element b, Element a) const { return rdiff_(b, a); }

  const Table& table() const noexcept { return add_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool associative() const noexcept { return associative_; }
  bool commutative() const noexcept { return commutative_; }

  ElementSet all() const { return ElementSet::full(order()); }
  ElementSet zero() const { return ElementSet::singleton(order(), 0); }

  /// Tables compare equal; labels are presentation only.
  friend bool operator==(const FiniteLoop& a, const FiniteLoop& b) { return a.add_ == b.add_; }

 private:
  FiniteLoop() = default;

  Table add_;
  Table ldiff_;
  Table rdiff_;
  std::vector<std::string> labels_;
  bool associative_ = false;
  bool commutative_ = false;
};

/// Returns the first Latin-square or zero violation, if any.
std::optional<Error> loop_table_violation(const Table& add);

// Translates and sumsets, materialized as bitmasks.
ElementSet left_translate(const FiniteLoop& loop, Element a, const ElementSet& k);   // a + K
ElementSet right_translate(const FiniteLoop& loop, const ElementSet& k, Element a);  // K + a
ElementSet sumset(const FiniteLoop& loop, const ElementSet& a, const ElementSet& b);  // A + B

/// Closed under +, left and right difference. Throws Errc::empty_set.
bool is_subloop(const FiniteLoop& loop, const ElementSet& s);

/// Least subloop containing `seed` and 0. When `action` is given (rows are
/// operators, columns carrier elements) the result is also closed under
/// a -> action(r, a) for every row r.
ElementSet generated_subloop(const FiniteLoop& loop, const ElementSet& seed,
                             const Table* action = nullptr);

/// Throws Errc::not_a_subloop when `k` is not a subloop.
bool is_normal_subloop(const FiniteLoop& loop, const ElementSet& k);

/// Coset label of every element for a normal subloop `k`; cosets are
/// numbered by their least element, so the coset K itself is 0.
std::vector<Element> coset_labels(const FiniteLoop& loop, const ElementSet& k);

struct LoopQuotient {
  FiniteLoop loop;
  ElementMap projection;       // carrier element -> coset index
  ElementMap representatives;  // coset index -> least element of the coset
};

/// The coset loop (a+K)+(b+K) = (a+b)+K. Throws Errc::not_normal.
LoopQuotient quotient_loop(const FiniteLoop& loop, const ElementSet& k);

/// First violation of phi(a+b) = phi(a)+phi(b), or a malformed map.
std::optional<Witness> loop_hom_violation(const FiniteLoop& domain, const FiniteLoop& codomain,
                                          std::span<const Element> map);
inline bool is_loop_hom(const FiniteLoop& domain, const FiniteLoop& codomain,
                        std::span<const Element> map) {
  return !loop_hom_violation(domain, codomain, map);
}
/// Throws Errc::not_a_homomorphism with the witness pair.
void require_loop_hom(const FiniteLoop& domain, const FiniteLoop& codomain,
                      std::span<const Element> map);

ElementSet kernel(std::span<const Element> map);
ElementSet image(const FiniteLoop& codomain, std::span<const Element> map);

/// Every homomorphism domain -> codomain, in lexicographic order of value
/// vectors. The callback returns false to stop early.
void for_each_loop_hom(const FiniteLoop& domain, const FiniteLoop& codomain,
                       const std::function<bool(const ElementMap&)>& visit);
std::vector<ElementMap> all_loop_homs(const FiniteLoop& domain, const FiniteLoop& codomain);

/// The lattice of all sets closed under the loop operations (and `action`,
/// when given), sorted by ElementSet ordering. Built from closures of
/// one- and two-element seeds, then closed under joins.
std::vector<ElementSet> closure_lattice(const FiniteLoop& loop, const Table* action = nullptr);

std::vector<ElementSet> all_subloops(const FiniteLoop& loop);
std::vector<ElementSet> all_normal_subloops(const FiniteLoop& loop);

/// Inclusion-maximal members of `family` other than `whole`.
std::vector<ElementSet> maximal_proper(std::span<const ElementSet> family, const ElementSet& whole);

/// A loop isomorphism lhs -> rhs, if one exists.
std::optional<ElementMap> loops_isomorphic(const FiniteLoop& lhs, const FiniteLoop& rhs);

/// Relabels a loop by a permutation fixing 0: the result's table is
/// T'[p(a)][p(b)] = p(T[a][b]).
FiniteLoop relabel(const FiniteLoop& loop, std::span<const Element> perm);

}  // namespace lnr
