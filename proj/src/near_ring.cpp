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

#include "lnr/near_ring.hpp"

#include <algorithm>

#include "lnr/module.hpp"

namespace lnr {

std::optional<Error> near_ring_violation(const FiniteLoop& additive, const Table& mul) {
  const std::size_t n = additive.order();
  if (mul.rows() != n || mul.cols() != n) {
    return Error(Errc::malformed, "multiplication table is " + std::to_string(mul.rows()) + "x" +
                                      std::to_string(mul.cols()) + ", expected " +
                                      std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (mul(r, c) >= n) {
        return Error(Errc::malformed, "multiplication entry (" + std::to_string(r) + "," +
                                          std::to_string(c) + ") out of range");
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          return Error(Errc::not_associative, "multiplication is not associative",
                       Witness{"(ab)c=a(bc)", {a, b, c}});
        }
      }
    }
  }
  for (Element m1 = 0; m1 < n; ++m1) {
    for (Element m2 = 0; m2 < n; ++m2) {
      for (Element x = 0; x < n; ++x) {
        if (mul(additive.add(m1, m2), x) != additive.add(mul(m1, x), mul(m2, x))) {
          return Error(Errc::not_right_distributive, "multiplication is not right distributive",
                       Witness{"(m1+m2)n=m1n+m2n", {m1, m2, x}});
        }
      }
    }
  }
  // Consequences of right distributivity; a failure here means the loop
  // itself is inconsistent with the multiplication.
  for (Element m1 = 0; m1 < n; ++m1) {
    for (Element m2 = 0; m2 < n; ++m2) {
      for (Element x = 0; x < n; ++x) {
        if (mul(0, x) != 0) {
          return Error(Errc::not_right_distributive, "0n != 0", Witness{"0n=0", {x}});
        }
        if (mul(additive.left_difference(m1, m2), x) !=
            additive.left_difference(mul(m1, x), mul(m2, x))) {
          return Error(Errc::not_right_distributive, "left difference not preserved",
                       Witness{"(m1\\m2)n=m1n\\m2n", {m1, m2, x}});
        }
        if (mul(additive.right_difference(m1, m2), x) !=
            additive.right_difference(mul(m1, x), mul(m2, x))) {
          return Error(Errc::not_right_distributive, "right difference not preserved",
                       Witness{"(m1/m2)n=m1n/m2n", {m1, m2, x}});
        }
      }
    }
  }
  return std::nullopt;
}

LoopNearRing LoopNearRing::from_parts(FiniteLoop additive, Table mul, bool require_unital) {
  if (auto err = near_ring_violation(additive, mul)) throw *err;
  const std::size_t n = additive.order();
  LoopNearRing nr(std::move(additive));
  nr.mul_ = std::move(mul);
  for (Element e = 0; e < n && !nr.identity_; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = nr.mul_(e, x) == x && nr.mul_(x, e) == x;
    if (ok) nr.identity_ = e;
  }
  if (require_unital && !nr.identity_) {
    throw Error(Errc::no_identity, "no two-sided multiplicative identity");
  }
  nr.zero_symmetric_ = true;
  for (Element x = 0; x < n; ++x) nr.zero_symmetric_ = nr.zero_symmetric_ && nr.mul_(x, 0) == 0;
  nr.left_distributive_ = true;
  for (Element m = 0; m < n && nr.left_distributive_; ++m) {
    for (Element a = 0; a < n && nr.left_distributive_; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (nr.mul_(m, nr.add(a, b)) != nr.add(nr.mul_(m, a), nr.mul_(m, b))) {
          nr.left_distributive_ = false;
          break;
        }
      }
    }
  }
  return nr;
}

LoopNearRing LoopNearRing::from_tables(Table add, Table mul, bool require_unital) {
  return from_parts(FiniteLoop::from_table(std::move(add)), std::move(mul), require_unital);
}

LoopNearRing LoopNearRing::integers_mod(std::size_t n) {
  Table mul(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul(a, b) = static_cast<Element>((a * b) % n);
  }
  return from_parts(FiniteLoop::cyclic(n), std::move(mul));
}

LoopNearRing LoopNearRing::product(const LoopNearRing& lhs, const LoopNearRing& rhs) {
  FiniteLoop add = FiniteLoop::product(lhs.additive(), rhs.additive());
  const std::size_t m = rhs.order();
  const std::size_t n = add.order();
  Table mul(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      mul(x, y) = static_cast<Element>(
          lhs.mul(static_cast<Element>(x / m), static_cast<Element>(y / m)) * m +
          rhs.mul(static_cast<Element>(x % m), static_cast<Element>(y % m)));
    }
  }
  return from_parts(std::move(add), std::move(mul));
}

Element LoopNearRing::one() const {
  if (!identity_) throw Error(Errc::not_unital, "near-ring has no identity");
  return *identity_;
}

ElementSet zero_symmetric_part(const LoopNearRing& n) {
  ElementSet out(n.order());
  for (Element y = 0; y < n.order(); ++y) {
    if (n.mul(y, 0) == 0) out.insert(y);
  }
  return out;
}

ElementSet constant_part(const LoopNearRing& n) {
  ElementSet out(n.order());
  for (Element x = 0; x < n.order(); ++x) out.insert(n.mul(x, 0));
  return out;
}

UnitRecord units(const LoopNearRing& n) {
  const Element one = n.one();
  const std::size_t order = n.order();
  UnitRecord rec{ElementSet(order), std::vector<std::optional<Element>>(order),
                 std::vector<std::vector<Element>>(order), std::vector<std::vector<Element>>(order)};
  for (Element y = 0; y < order; ++y) {
    for (Element z = 0; z < order; ++z) {
      if (n.mul(z, y) == one) rec.left_inverses[y].push_back(z);
      if (n.mul(y, z) == one) rec.right_inverses[y].push_back(z);
      if (n.mul(z, y) == one && n.mul(y, z) == one) {
        rec.units.insert(y);
        rec.inverse[y] = z;
      }
    }
  }
  return rec;
}

bool is_near_field(const LoopNearRing& n) {
  ElementSet nonzero = n.additive().all();
  nonzero.erase(0);
  return units(n).units == nonzero;
}

bool is_division_ring(const LoopNearRing& n) {
  return n.unital() && n.is_ring() && is_near_field(n);
}

std::vector<Element> idempotents(const LoopNearRing& n) {
  std::vector<Element> out;
  for (Element e = 0; e < n.order(); ++e) {
    if (n.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

std::vector<ElementMap> self_maps(const FiniteLoop& g, bool zero_fixing) {
  const std::size_t m = g.order();
  const std::size_t first = zero_fixing ? 1 : 0;
  std::vector<ElementMap> out;
  ElementMap v(m, 0);
  while (true) {
    out.push_back(v);
    // Odometer with the last coordinate fastest: lexicographic order.
    std::size_t i = m;
    while (i > first && v[i - 1] == m - 1) v[--i] = 0;
    if (i == first) return out;
    ++v[i - 1];
  }
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / std::max<std::size_t>(base, 1)) return cap + 1;
    out *= base;
  }
  return out;
}

LoopNearRing map_near_ring(const FiniteLoop& g, bool zero_fixing, std::size_t max_elements) {
  const std::size_t m = g.order();
  const std::size_t count = checked_power(m, zero_fixing ? m - 1 : m, max_elements);
  if (count > max_elements) {
    throw Error(Errc::size_cap_exceeded,
                std::string(zero_fixing ? "M0(G)" : "M(G)") + " for |G| = " + std::to_string(m) +
                    " exceeds the cap of " + std::to_string(max_elements) + " elements");
  }
  const auto maps = self_maps(g, zero_fixing);
  const std::size_t first = zero_fixing ? 1 : 0;
  auto index_of = [&](const ElementMap& v) {
    std::size_t idx = 0;
    for (std::size_t i = first; i < m; ++i) idx = idx * m + v[i];
    return static_cast<Element>(idx);
  };
  const std::size_t n = maps.size();
  Table add(n, n), mul(n, n);
  ElementMap tmp(m);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t x = 0; x < m; ++x) tmp[x] = g.add(maps[f][x], maps[h][x]);
      add(f, h) = index_of(tmp);
      for (std::size_t x = 0; x < m; ++x) tmp[x] = maps[f][maps[h][x]];
      mul(f, h) = index_of(tmp);
    }
  }
  return LoopNearRing::from_tables(std::move(add), std::move(mul), true);
}

}  // namespace

LoopNearRing transformation_near_ring(const FiniteLoop& g, std::size_t max_elements) {
  return map_near_ring(g, false, max_elements);
}

LoopNearRing transformation_near_ring_zero(const FiniteLoop& g, std::size_t max_elements) {
  return map_near_ring(g, true, max_elements);
}

std::optional<Witness> nr_hom_violation(const LoopNearRing& domain, const LoopNearRing& codomain,
                                        std::span<const Element> map) {
  if (auto w = loop_hom_violation(domain.additive(), codomain.additive(), map)) return w;
  for (Element a = 0; a < domain.order(); ++a) {
    for (Element b = 0; b < domain.order(); ++b) {
      if (map[domain.mul(a, b)] != codomain.mul(map[a], map[b])) {
        return Witness{"psi(ab)=psi(a)psi(b)", {a, b}};
      }
    }
  }
  if (domain.unital() && codomain.unital() && map[domain.one()] != codomain.one()) {
    return Witness{"psi(1)=1", {domain.one()}};
  }
  return std::nullopt;
}

ElementSet nr_kernel(const LoopNearRing& domain, const LoopNearRing& codomain,
                     std::span<const Element> map) {
  if (auto w = nr_hom_violation(domain, codomain, map)) {
    throw Error(Errc::not_a_homomorphism, "map is not a near-ring homomorphism", *w);
  }
  ElementSet k = kernel(map);
  if (!is_ideal(domain, k)) {
    throw Error(Errc::not_an_ideal, "kernel " + k.to_string() + " is not an ideal");
  }
  return k;
}

void for_each_nr_hom(const LoopNearRing& domain, const LoopNearRing& codomain,
                     const std::function<bool(const ElementMap&)>& visit) {
  for_each_loop_hom(domain.additive(), codomain.additive(), [&](const ElementMap& m) {
    if (nr_hom_violation(domain, codomain, m)) return true;
    return visit(m);
  });
}

NearRingQuotient quotient_near_ring(const LoopNearRing& n, const ElementSet& j) {
  if (!is_ideal(n, j)) throw Error(Errc::not_an_ideal, j.to_string() + " is not an ideal");
  LoopQuotient q = quotient_loop(n.additive(), j);
  const std::size_t m = q.loop.order();
  Table mul(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      mul(a, b) = q.projection[n.mul(q.representatives[a], q.representatives[b])];
    }
  }
  for (Element x = 0; x < n.order(); ++x) {
    for (Element y = 0; y < n.order(); ++y) {
      if (q.projection[n.mul(x, y)] != mul(q.projection[x], q.projection[y])) {
        throw Error(Errc::not_an_ideal, "coset multiplication is not well defined",
                    Witness{"(n+J)(m+J)=nm+J", {x, y}});
      }
    }
  }
  return {LoopNearRing::from_parts(std::move(q.loop), std::move(mul)), std::move(q.projection),
          std::move(q.representatives)};
}

}  // namespace lnr
