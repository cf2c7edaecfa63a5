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

// Randomised invariants. Every generator is seeded, so failures replay.

#include <doctest.h>

#include <random>

#include "lnr/module.hpp"
#include "lnr/radical.hpp"
#include "test_util.hpp"

using namespace lnr;
using lnr::testing::map_set;
using lnr::testing::random_subset;
using lnr::testing::random_zero_fixing;

namespace {

constexpr unsigned kSeed = 0x5eed;

std::vector<LoopNearRing> pool() {
  std::vector<LoopNearRing> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (auto& r : lnr::testing::uzs_classes(n)) out.push_back(std::move(r));
  }
  out.push_back(LoopNearRing::integers_mod(8));
  out.push_back(transformation_near_ring_zero(FiniteLoop::cyclic(3)));
  return out;
}

std::vector<ElementSet> mapped(const std::vector<ElementSet>& family, std::span<const Element> p) {
  std::vector<ElementSet> out;
  for (const auto& s : family) out.push_back(map_set(s, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("element-set algebra") {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 130;
    const ElementSet a = random_subset(n, rng, false);
    const ElementSet b = random_subset(n, rng, false);
    const ElementSet c = random_subset(n, rng, false);
    CHECK((a & b) == (b & a));
    CHECK((a | (b & c)) == ((a | b) & (a | c)));
    CHECK(a.complement().complement() == a);
    CHECK((a & a.complement()).empty());
    CHECK((a | a.complement()).is_full());
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(a | b));
    CHECK(a.intersects(b) == !(a & b).empty());
    CHECK(a.size() + a.complement().size() == n);
    CHECK(ElementSet(n, a.members()) == a);
    CHECK((a <=> a) == std::strong_ordering::equal);
  }
}

TEST_CASE("relabelling commutes with lattices and radicals") {
  std::mt19937 rng(kSeed + 1);
  for (const LoopNearRing& r : pool()) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = random_zero_fixing(r.order(), rng);
      const LoopNearRing s = lnr::testing::relabel(r, p);
      CHECK(sorted(left_ideals(s)) == mapped(left_ideals(r), p));
      CHECK(sorted(ideals(s)) == mapped(ideals(r), p));
      CHECK(sorted(left_subloops(LeftModule::regular(s))) == mapped(left_subloops(LeftModule::regular(r)), p));
      CHECK(units(s).units == map_set(units(r).units, p));

      const RadicalReport a = radicals(r);
      const RadicalReport b = radicals(s);
      CHECK(b.R == map_set(a.R, p));
      CHECK(b.J2 == map_set(a.J2, p));
      CHECK(b.J0 == map_set(a.J0, p));
      CHECK(b.D == map_set(a.D, p));

      const LocalnessReport la = localness(r);
      const LocalnessReport lb = localness(s);
      CHECK(la.conditions == lb.conditions);
      CHECK(la.local == lb.local);
    }
  }
}

TEST_CASE("quotients by random normal subloops") {
  std::mt19937 rng(kSeed + 2);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const FiniteLoop& g : lnr::testing::loop_classes(n)) {
      const auto normals = all_normal_subloops(g);
      const ElementSet& k = normals[rng() % normals.size()];
      const LoopQuotient q = quotient_loop(g, k);
      CHECK(q.loop.order() * k.size() == g.order());
      CHECK(is_loop_hom(g, q.loop, q.projection));
      // Cosets partition the carrier.
      std::vector<std::size_t> sizes(q.loop.order(), 0);
      for (Element x : q.projection) ++sizes[x];
      for (std::size_t s : sizes) CHECK(s == k.size());
    }
  }
}

TEST_CASE("compositions of homomorphisms are homomorphisms") {
  std::mt19937 rng(kSeed + 3);
  const FiniteLoop z12 = FiniteLoop::cyclic(12);
  const FiniteLoop z6 = FiniteLoop::cyclic(6);
  const FiniteLoop z3 = FiniteLoop::cyclic(3);
  const auto f = all_loop_homs(z12, z6);
  const auto g = all_loop_homs(z6, z3);
  CHECK(f.size() == 6);
  CHECK(g.size() == 3);
  for (int trial = 0; trial < 50; ++trial) {
    const ElementMap& a = f[rng() % f.size()];
    const ElementMap& b = g[rng() % g.size()];
    ElementMap c(12);
    for (Element x = 0; x < 12; ++x) c[x] = b[a[x]];
    CHECK(is_loop_hom(z12, z3, c));
    // Kernels grow along compositions.
    CHECK(kernel(a).is_subset_of(kernel(c)));
  }
}

TEST_CASE("K + I on random pairs in modules of maps") {
  std::mt19937 rng(kSeed + 4);
  for (const LeftModule& m : {LeftModule::of_maps(FiniteLoop::cyclic(3), true),
                              LeftModule::of_maps(FiniteLoop::cyclic(2), false),
                              LeftModule::regular(LoopNearRing::integers_mod(12))}) {
    const auto ks = left_submodules(m);
    const auto is = left_subloops(m);
    for (int trial = 0; trial < 40; ++trial) {
      const SumReport s = check_k_plus_i(m, ks[rng() % ks.size()], is[rng() % is.size()]);
      CHECK(s.ok());
    }
  }
}

TEST_CASE("generated subloops are the least subloops containing a seed") {
  std::mt19937 rng(kSeed + 5);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const FiniteLoop& g : lnr::testing::loop_classes(n)) {
      const auto subs = all_subloops(g);
      for (int trial = 0; trial < 10; ++trial) {
        const ElementSet seed = random_subset(n, rng);
        const ElementSet gen = generated_subloop(g, seed);
        CHECK(is_subloop(g, gen));
        CHECK(seed.is_subset_of(gen));
        for (const auto& s : subs) {
          if (seed.is_subset_of(s)) CHECK(gen.is_subset_of(s));
        }
      }
    }
  }
}
