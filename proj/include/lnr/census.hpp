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

// Exhaustive enumeration of small loops and loop near-rings.
//
// Loops are generated as Latin squares whose first row and column are the
// identity, so element 0 is always the zero. Isomorph rejection is done
// without a dedup set: a square is emitted only when it equals its own
// canonical form. Near-rings over a fixed additive loop are built column
// by column, each column x -> x*n being an endomorphism of (N,+).

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "lnr/loop.hpp"
#include "lnr/near_ring.hpp"
#include "lnr/radical.hpp"

namespace lnr {

enum class FillOrder { row_major, column_major };

struct CensusFilters {
  bool unital = false;
  bool zero_symmetric = false;
  bool non_associative_add = false;
  bool not_left_distributive = false;
  bool local = false;
  bool near_field = false;
};

struct CensusCaps {
  std::size_t max_loop_order = 6;
  std::size_t max_additive_order = 6;
};

struct CensusQuery {
  enum class Kind { loops, near_rings };

  Kind kind = Kind::loops;
  std::size_t order = 0;
  /// Near-rings only. When absent, every loop of `order` (up to
  /// isomorphism) is used as the additive loop in turn.
  std::optional<FiniteLoop> additive;
  CensusFilters filters;
  bool up_to_iso = true;
  std::optional<std::size_t> limit;
  FillOrder fill = FillOrder::row_major;
  CensusCaps caps;
};

/// Row-major bytes of the table(s), minimised over relabellings that fix 0.
using CanonicalForm = std::vector<std::uint8_t>;

inline constexpr std::size_t kCanonicalFormMaxOrder = 10;

/// Throws Errc::order_cap_exceeded above kCanonicalFormMaxOrder.
CanonicalForm canonical_form(const FiniteLoop& loop);
CanonicalForm canonical_form(const LoopNearRing& ring);

/// Streams loops to `visit` until it returns false or the limit is hit.
/// Returns the number emitted. Throws Errc::order_cap_exceeded.
std::size_t enumerate_loops(const CensusQuery& q, const std::function<bool(const FiniteLoop&)>& visit);
std::size_t enumerate_near_rings(const CensusQuery& q,
                                 const std::function<bool(const LoopNearRing&)>& visit);

/// Number of Latin squares with identity row and column (no isomorph
/// rejection); used to cross-check the two fill orders.
std::size_t count_reduced_squares(std::size_t order, FillOrder fill);

struct SpecimenAnalysis {
  std::size_t order = 0;
  bool associative_add = false;
  bool commutative_add = false;
  // Near-ring fields; left at their defaults for loops.
  bool genuine_loop = false;
  bool left_distributive = false;
  bool unital = false;
  bool zero_symmetric = false;
  bool ring = false;
  std::optional<bool> near_field;
  std::optional<bool> local;
  std::optional<ElementSet> m;
  std::optional<RadicalReport> radicals;
};

SpecimenAnalysis analyze_specimen(const FiniteLoop& loop);
SpecimenAnalysis analyze_specimen(const LoopNearRing& ring);

struct Specimen {
  std::variant<FiniteLoop, LoopNearRing> structure;
  CanonicalForm form;
  SpecimenAnalysis analysis;
};

/// Enumerates, analyses (on `threads` workers) and sorts by canonical form,
/// so the result does not depend on scheduling.
std::vector<Specimen> find_specimens(const CensusQuery& q, unsigned threads = 1);

}  // namespace lnr
