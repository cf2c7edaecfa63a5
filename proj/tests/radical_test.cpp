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

#include <doctest.h>

#include "lnr/radical.hpp"
#include "test_util.hpp"

using namespace lnr;
using lnr::testing::bits;
using lnr::testing::grid;

namespace {

std::vector<LoopNearRing> radical_domain() {
  std::vector<LoopNearRing> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (auto& r : lnr::testing::uzs_classes(n)) out.push_back(std::move(r));
  }
  out.push_back(transformation_near_ring_zero(FiniteLoop::cyclic(3)));
  return out;
}

LoopNearRing f4() {
  // GF(4) = {0, 1, a, a+1} with a^2 = a + 1; addition is XOR.
  Table add(4, 4);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) add(x, y) = x ^ y;
  Table mul = Table::from_rows({{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
  return LoopNearRing::from_tables(std::move(add), std::move(mul), true);
}

}  // namespace

TEST_CASE("radicals of Z/n equal the classical Jacobson radical") {
  for (int n : {2, 3, 4, 5, 6, 8, 9, 10, 12}) {
    const LoopNearRing z = LoopNearRing::integers_mod(static_cast<std::size_t>(n));
    const RadicalReport r = radicals(z);
    const oracle::Subset j = oracle::ring_jacobson(oracle::zn_add(n), oracle::zn_mul(n));
    CAPTURE(n);
    CHECK(bits(r.R) == j);
    CHECK(bits(r.J2) == j);
    CHECK(bits(r.J0) == j);
    CHECK(bits(r.D) == j);
    CHECK(r.J2_by_annihilators == r.J2);
    CHECK_FALSE(r.j2_is_whole);
  }
  // Hand values: J(Z8) = 2Z8, J(Z12) = 6Z12.
  CHECK(radicals(LoopNearRing::integers_mod(8)).J2 == ElementSet(8, {0, 2, 4, 6}));
  CHECK(radicals(LoopNearRing::integers_mod(12)).J2 == ElementSet(12, {0, 6}));
}

TEST_CASE("radicals need a unital zero-symmetric near-ring of order at least two") {
  CHECK_THROWS_AS(radicals(LoopNearRing::integers_mod(1)), Error);
  CHECK_THROWS_AS(radicals(transformation_near_ring(FiniteLoop::cyclic(2))), Error);
  const LoopNearRing zero = LoopNearRing::from_tables(FiniteLoop::cyclic(3).table(), Table(3, 3, 0));
  try {
    radicals(zero);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
}

TEST_CASE("radicals against subset scans on every small near-ring") {
  for (const LoopNearRing& r : radical_domain()) {
    const oracle::Grid add = grid(r.additive().table());
    const oracle::Grid mul = grid(r.mul_table());
    const int n = static_cast<int>(r.order());
    const auto subloops = oracle::scan(n, [&](oracle::Subset s) { return oracle::left_n_subloop(add, mul, s); });
    const auto lideals = oracle::scan(n, [&](oracle::Subset s) { return oracle::left_ideal(add, mul, s); });
    const auto max_sub = oracle::maximal_proper(subloops, n);
    std::vector<oracle::Subset> n_max;
    for (oracle::Subset s : max_sub) {
      if (oracle::left_ideal(add, mul, s)) n_max.push_back(s);
    }
    const auto max_ideal = oracle::maximal_proper(lideals, n);

    const RadicalReport rep = radicals(r);
    CHECK(bits(rep.maximal_left_subloops) == lnr::testing::sorted(max_sub));
    CHECK(bits(rep.n_maximal_left_ideals) == lnr::testing::sorted(n_max));
    CHECK(bits(rep.maximal_left_ideals) == lnr::testing::sorted(max_ideal));
    CHECK(bits(rep.R) == oracle::meet(max_sub, n));
    CHECK(bits(rep.J2) == oracle::meet(n_max, n));
    CHECK(bits(rep.D) == oracle::meet(max_ideal, n));
    CHECK(rep.j2_is_whole == n_max.empty());
    CHECK(rep.J2_by_annihilators == rep.J2);
    // R is always quasiregular and sits inside J2.
    CHECK(oracle::quasiregular(add, mul, bits(rep.R)));
    CHECK(rep.R.is_subset_of(rep.J2));
  }
}

TEST_CASE("D(N) need not lie in R(N)") {
  const LoopNearRing n = lnr::testing::d_not_in_r_example();
  const oracle::Grid add = grid(n.additive().table());
  const oracle::Grid mul = grid(n.mul_table());
  REQUIRE(oracle::near_ring(add, mul));
  CHECK(oracle::identity(mul) == 3);

  // Recomputed from the definitions, without the library.
  const auto lideals = oracle::scan(4, [&](oracle::Subset s) { return oracle::left_ideal(add, mul, s); });
  const auto subloops = oracle::scan(4, [&](oracle::Subset s) { return oracle::left_n_subloop(add, mul, s); });
  CHECK(oracle::maximal_proper(lideals, 4) == std::vector<oracle::Subset>{0b0011});
  CHECK(lnr::testing::sorted(oracle::maximal_proper(subloops, 4)) == std::vector<oracle::Subset>{0b0011, 0b0101});
  // 1 is not quasiregular: y + 1 = 3 gives y = 2, and N*2 = {0, 2}.
  CHECK_FALSE(oracle::quasiregular(add, mul, 0b0010));

  const RadicalReport r = radicals(n);
  CHECK(r.D == ElementSet(4, {0, 1}));
  CHECK(r.J2 == ElementSet(4, {0, 1}));
  CHECK(r.J0 == ElementSet(4, {0, 1}));
  CHECK(r.R == ElementSet(4, {0}));
  CHECK_FALSE(r.D.is_subset_of(r.R));
  CHECK_FALSE(is_quasiregular(n, r.D));
  // Every quasiregular left ideal still lies in R.
  const QuasiregularChecks q = quasiregular_closure_checks(n);
  CHECK(q.ok());
}

TEST_CASE("quasiregularity against a scan") {
  for (const LoopNearRing& r : radical_domain()) {
    const oracle::Grid add = grid(r.additive().table());
    const oracle::Grid mul = grid(r.mul_table());
    for (Element q = 0; q < r.order(); ++q) {
      CHECK(is_quasiregular(r, q) == oracle::quasiregular(add, mul, 1u << q));
    }
    const QuasiregularChecks c = quasiregular_closure_checks(r);
    CHECK(c.ok());
    CHECK(c.quasiregular_idempotents == std::vector<Element>{0});
  }
}

TEST_CASE("localness of Z4, Z6 and F4") {
  const LocalnessReport z4 = localness(LoopNearRing::integers_mod(4));
  CHECK(z4.local);
  CHECK(z4.ok());
  REQUIRE(z4.m);
  CHECK(*z4.m == ElementSet(4, {0, 2}));
  for (bool c : z4.conditions) CHECK(c);

  const LocalnessReport z6 = localness(LoopNearRing::integers_mod(6));
  CHECK_FALSE(z6.local);
  CHECK(z6.ok());
  CHECK_FALSE(z6.m);
  for (bool c : z6.conditions) CHECK_FALSE(c);
  CHECK(z6.non_units == ElementSet(6, {0, 2, 3, 4}));

  const LocalnessReport f = localness(f4());
  CHECK(f.local);
  CHECK(*f.m == ElementSet(4, {0}));
}

TEST_CASE("localness conditions against direct evaluation") {
  for (const LoopNearRing& r : radical_domain()) {
    const LocalnessReport rep = localness(r);
    if (rep.j2_is_whole) continue;
    const oracle::Grid add = grid(r.additive().table());
    const oracle::Grid mul = grid(r.mul_table());
    const int n = static_cast<int>(r.order());
    const oracle::Subset non_units = oracle::full(n) & ~oracle::units(mul);
    const bool d = oracle::ideal(add, mul, non_units);
    const bool e = oracle::subloop(add, non_units);
    bool f = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!oracle::has(non_units, add[a][b]) && oracle::has(non_units, a) && oracle::has(non_units, b))
          f = false;
    CHECK(rep.conditions[3] == d);
    CHECK(rep.conditions[4] == e);
    CHECK(rep.conditions[5] == f);
    CHECK(rep.equivalent);
    CHECK(rep.ok());
    if (rep.local) {
      REQUIRE(rep.m);
      CHECK(bits(*rep.m) == non_units);
      CHECK(*rep.m == rep.radicals.R);
      CHECK(*rep.m == rep.radicals.J2);
      CHECK(*rep.m == rep.radicals.J0);
      CHECK(*rep.m == rep.radicals.D);
      for (Element x : idempotents(r)) CHECK((x == 0 || x == r.one()));
    }
  }
}

TEST_CASE("N-simple modules and orbits") {
  const LeftModule reg = LeftModule::regular(LoopNearRing::integers_mod(5));
  CHECK(is_N_simple(reg));
  CHECK_FALSE(is_N_simple(LeftModule::regular(LoopNearRing::integers_mod(4))));
  CHECK(orbit(reg, 2) == ElementSet::full(5));
  CHECK_THROWS_AS(is_N_simple(LeftModule::regular(LoopNearRing::integers_mod(1))), Error);
}

TEST_CASE("local homomorphisms and the kernel theorem") {
  const LoopNearRing z4 = LoopNearRing::integers_mod(4);
  const LoopNearRing z2 = LoopNearRing::integers_mod(2);
  const ElementMap reduce{0, 1, 0, 1};
  CHECK(is_local_hom(z4, z2, reduce));
  CHECK(check_kernel_of_local_hom(z4, z2, reduce));

  // Projection of Z2 x Z2 onto its first factor is not local: (1,0) is a
  // non-unit mapped to the unit 1.
  const LoopNearRing v = LoopNearRing::product(z2, z2);
  const ElementMap first{0, 0, 1, 1};
  const auto w = local_hom_violation(v, z2, first);
  REQUIRE(w);
  CHECK(*w == 2);
  CHECK_THROWS_AS(local_hom_violation(z4, z2, ElementMap{0, 1, 1, 0}), Error);

  for (const LoopNearRing& r : radical_domain()) {
    const KernelTheoremReport rep = check_local_hom_kernel_theorem(r);
    CHECK(rep.ok());
    const oracle::Grid add = grid(r.additive().table());
    const oracle::Grid mul = grid(r.mul_table());
    for (const auto& e : rep.entries) {
      CHECK(e.quasiregular == oracle::quasiregular(add, mul, bits(e.ideal)));
      CHECK(e.quasiregular == e.quotient_local);
    }
  }
}

TEST_CASE("localness transfers along local homomorphisms into local rings") {
  const LoopNearRing z8 = LoopNearRing::integers_mod(8);
  const LoopNearRing z2 = LoopNearRing::integers_mod(2);
  ElementMap reduce(8);
  for (Element x = 0; x < 8; ++x) reduce[x] = x % 2;
  const TransferReport t = check_local_transfer(z8, z2, reduce);
  CHECK(t.ok());
  CHECK(t.hom_local);
  CHECK(t.codomain_ring);
  CHECK(t.domain_local);
  REQUIRE(t.quotient_division_ring);
  CHECK(*t.quotient_division_ring);

  const LoopNearRing z6 = LoopNearRing::integers_mod(6);
  ElementMap to_z2(6);
  for (Element x = 0; x < 6; ++x) to_z2[x] = x % 2;
  const TransferReport u = check_local_transfer(z6, z2, to_z2);
  CHECK(u.ok());
  CHECK_FALSE(u.hom_local);
  CHECK(u.domain_j2_proper);
}
