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

#include <random>

#include "lnr/loop.hpp"
#include "test_util.hpp"

using namespace lnr;
using lnr::testing::bits;
using lnr::testing::grid;

TEST_CASE("cyclic loops and products") {
  const FiniteLoop z4 = FiniteLoop::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.associative());
  CHECK(z4.commutative());
  CHECK(z4.add(3, 2) == 1);
  CHECK(z4.left_difference(3, 1) == 2);
  CHECK(z4.right_difference(1, 3) == 2);

  const FiniteLoop v = FiniteLoop::product(FiniteLoop::cyclic(2), FiniteLoop::cyclic(2));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(v.add(a, b) == (a ^ b));
  CHECK(FiniteLoop::trivial().order() == 1);
}

TEST_CASE("table validation reports the offending row") {
  Table t = Table::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 2, 1}});
  try {
    FiniteLoop::from_table(t);
    FAIL("expected a NotLatinSquare error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_latin_square);
    REQUIRE(e.witness());
    CHECK(e.witness()->elements.front() == 2);
  }

  // Latin, but 0 is not an identity.
  Table shifted = Table::from_rows({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(FiniteLoop::from_table(shifted), Error);
  try {
    FiniteLoop::from_table(shifted);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_two_sided_zero);
  }

  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), Error);
  CHECK_FALSE(loop_table_violation(FiniteLoop::cyclic(5).table()));
}

TEST_CASE("differences solve their equations on every loop up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const FiniteLoop& g : lnr::testing::labelled_loops(n)) {
      CHECK(oracle::is_loop(grid(g.table())));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          CHECK(g.add(a, g.left_difference(a, b)) == b);
          CHECK(g.add(g.right_difference(b, a), a) == b);
          CHECK(g.left_difference(a, g.add(a, b)) == b);
          CHECK(g.right_difference(g.add(b, a), a) == b);
        }
      }
    }
  }
}

TEST_CASE("subloop lattices agree with a scan over all subsets") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const FiniteLoop& g : lnr::testing::labelled_loops(n)) {
      const oracle::Grid add = grid(g.table());
      const int k = static_cast<int>(n);
      CHECK(bits(all_subloops(g)) == oracle::scan(k, [&](oracle::Subset s) { return oracle::subloop(add, s); }));
      CHECK(bits(all_normal_subloops(g)) ==
            oracle::scan(k, [&](oracle::Subset s) { return oracle::normal(add, s); }));
    }
  }
}

TEST_CASE("normal subloops of a non-associative loop of order 6") {
  // Every order-6 loop class: normal subloops are exactly the kernels of
  // the projections onto their quotients.
  for (const FiniteLoop& g : lnr::testing::loop_classes(6)) {
    const auto normals = all_normal_subloops(g);
    for (const auto& k : normals) {
      const LoopQuotient q = quotient_loop(g, k);
      CHECK(q.loop.order() * k.size() == g.order());
      CHECK(is_loop_hom(g, q.loop, q.projection));
      CHECK(kernel(q.projection) == k);
      for (Element c = 0; c < q.loop.order(); ++c) CHECK(q.projection[q.representatives[c]] == c);
    }
  }
}

TEST_CASE("quotient of Z6 by {0,3}") {
  const FiniteLoop z6 = FiniteLoop::cyclic(6);
  const ElementSet k(6, {0, 3});
  REQUIRE(is_normal_subloop(z6, k));
  const LoopQuotient q = quotient_loop(z6, k);
  CHECK(q.loop.order() == 3);
  CHECK(q.representatives == ElementMap{0, 1, 2});
  CHECK(q.projection == ElementMap{0, 1, 2, 0, 1, 2});
  CHECK_THROWS_AS(quotient_loop(z6, ElementSet(6, {0, 2})), Error);
}

TEST_CASE("homomorphisms between cyclic loops") {
  const FiniteLoop z4 = FiniteLoop::cyclic(4);
  const FiniteLoop z2 = FiniteLoop::cyclic(2);
  // Z4 -> Z2: the zero map and reduction mod 2.
  CHECK(all_loop_homs(z4, z2).size() == 2);
  // Z2 -> Z4: 0 and the map 1 -> 2.
  CHECK(all_loop_homs(z2, z4).size() == 2);
  const ElementMap reduce{0, 1, 0, 1};
  CHECK(is_loop_hom(z4, z2, reduce));
  CHECK(kernel(reduce) == ElementSet(4, {0, 2}));
  CHECK(image(z2, reduce) == z2.all());
  const ElementMap bad{0, 1, 1, 0};
  CHECK(loop_hom_violation(z4, z2, bad));
  CHECK_THROWS_AS(require_loop_hom(z4, z2, bad), Error);
}

TEST_CASE("relabelled loops are isomorphic and the isomorphism is a hom") {
  std::mt19937 rng(20261016);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const FiniteLoop& g : lnr::testing::loop_classes(n)) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto p = lnr::testing::random_zero_fixing(n, rng);
        const FiniteLoop h = relabel(g, p);
        const auto iso = loops_isomorphic(g, h);
        REQUIRE(iso);
        CHECK(is_loop_hom(g, h, *iso));
      }
    }
  }
}

TEST_CASE("maximal proper members of a family") {
  const std::vector<ElementSet> family{ElementSet(4, {0}), ElementSet(4, {0, 1}), ElementSet(4, {0, 2}),
                                       ElementSet(4, {0, 1, 2, 3})};
  const auto max = maximal_proper(family, ElementSet::full(4));
  CHECK(max == std::vector<ElementSet>{ElementSet(4, {0, 1}), ElementSet(4, {0, 2})});
}

TEST_CASE("sums and translates in Z2 x Z2") {
  const FiniteLoop v = FiniteLoop::product(FiniteLoop::cyclic(2), FiniteLoop::cyclic(2));
  const ElementSet a(4, {0, 1});
  const ElementSet b(4, {0, 2});
  CHECK(sumset(v, a, b) == v.all());
  CHECK(left_translate(v, 2, a) == ElementSet(4, {2, 3}));
  CHECK(right_translate(v, a, 2) == ElementSet(4, {2, 3}));
  CHECK(generated_subloop(v, ElementSet(4, {1, 2})) == v.all());
  CHECK(coset_labels(v, a) == std::vector<Element>{0, 0, 1, 1});
}
