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

// Shared helpers for the test binaries: conversions between library types
// and the plain tables used by the oracles, fixture paths, and seeded
// generators.

#ifndef LNR_TESTS_TEST_UTIL_HPP_
#define LNR_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lnr/census.hpp"
#include "lnr/core.hpp"
#include "lnr/loop.hpp"
#include "lnr/near_ring.hpp"
#include "oracles.hpp"

#ifndef LNR_FIXTURE_DIR
#define LNR_FIXTURE_DIR "tests/fixtures"
#endif

namespace lnr::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(LNR_FIXTURE_DIR) / name;
}

inline oracle::Grid grid(const Table& t) {
  oracle::Grid g(t.rows(), std::vector<int>(t.cols()));
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) g[r][c] = static_cast<int>(t(r, c));
  return g;
}

inline Table table(const oracle::Grid& g) {
  std::vector<std::vector<Element>> rows;
  for (const auto& r : g) rows.emplace_back(r.begin(), r.end());
  return Table::from_rows(rows);
}

inline oracle::Subset bits(const ElementSet& s) {
  oracle::Subset out = 0;
  s.for_each([&](Element e) { out |= 1u << e; });
  return out;
}

inline ElementSet set_of(oracle::Subset s, std::size_t n) {
  ElementSet out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (oracle::has(s, static_cast<int>(i))) out.insert(static_cast<Element>(i));
  }
  return out;
}

inline std::vector<oracle::Subset> bits(const std::vector<ElementSet>& family) {
  std::vector<oracle::Subset> out;
  for (const auto& s : family) out.push_back(bits(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Subset> sorted(std::vector<oracle::Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Every loop on {0..n-1} with identity 0.
inline std::vector<FiniteLoop> labelled_loops(std::size_t n) {
  CensusQuery q;
  q.order = n;
  q.up_to_iso = false;
  std::vector<FiniteLoop> out;
  enumerate_loops(q, [&](const FiniteLoop& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

inline std::vector<FiniteLoop> loop_classes(std::size_t n) {
  CensusQuery q;
  q.order = n;
  std::vector<FiniteLoop> out;
  enumerate_loops(q, [&](const FiniteLoop& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// Unital zero-symmetric near-rings of order n, one per isomorphism class.
inline std::vector<LoopNearRing> uzs_classes(std::size_t n) {
  CensusQuery q;
  q.kind = CensusQuery::Kind::near_rings;
  q.order = n;
  q.filters.unital = true;
  q.filters.zero_symmetric = true;
  std::vector<LoopNearRing> out;
  enumerate_near_rings(q, [&](const LoopNearRing& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

// A uniformly random permutation of {0..n-1} fixing 0.
inline std::vector<Element> random_zero_fixing(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  if (n > 1) std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

inline ElementSet random_subset(std::size_t n, std::mt19937& rng, bool with_zero = true) {
  ElementSet s(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) s.insert(static_cast<Element>(i));
  }
  if (with_zero && n > 0) s.insert(0);
  return s;
}

inline LoopNearRing relabel(const LoopNearRing& r, std::span<const Element> p) {
  const std::size_t n = r.order();
  Table mul(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul(p[a], p[b]) = p[r.mul(a, b)];
  return LoopNearRing::from_parts(lnr::relabel(r.additive(), p), std::move(mul));
}

inline ElementSet map_set(const ElementSet& s, std::span<const Element> p) {
  return image_of(s.carrier_order(), p, s);
}

// The counterexample ring on Z2 x Z2: the left ideal {0,1} is the only
// maximal one, while {0,1} and {0,2} are both maximal left N-subloops.
inline LoopNearRing d_not_in_r_example() {
  Table add(4, 4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) add(a, b) = a ^ b;
  Table mul = Table::from_rows({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}});
  return LoopNearRing::from_tables(std::move(add), std::move(mul), true);
}

}  // namespace lnr::testing

#endif  // LNR_TESTS_TEST_UTIL_HPP_
