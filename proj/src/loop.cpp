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

#include "lnr/loop.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lnr {

std::optional<Error> loop_table_violation(const Table& add) {
  const std::size_t n = add.rows();
  if (n == 0) return Error(Errc::malformed, "loop table is empty");
  if (add.cols() != n) {
    return Error(Errc::malformed, "loop table is " + std::to_string(n) + "x" +
                                      std::to_string(add.cols()) + ", expected square");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (add(r, c) >= n) {
        return Error(Errc::malformed, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                          ") = " + std::to_string(add(r, c)) + " out of range");
      }
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[add(r, c)]++) {
        return Error(Errc::not_latin_square, "row " + std::to_string(r) + " repeats value " +
                                                 std::to_string(add(r, c)),
                     Witness{"row_repeat", {static_cast<Element>(r), add(r, c)}});
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[add(r, c)]++) {
        return Error(Errc::not_latin_square, "column " + std::to_string(c) + " repeats value " +
                                                 std::to_string(add(r, c)),
                     Witness{"column_repeat", {static_cast<Element>(c), add(r, c)}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (add(0, a) != a || add(a, 0) != a) {
      return Error(Errc::no_two_sided_zero, "element 0 is not a two-sided zero",
                   Witness{"zero_law", {static_cast<Element>(a)}});
    }
  }
  return std::nullopt;
}

FiniteLoop FiniteLoop::from_table(Table add, std::vector<std::string> labels) {
  if (auto err = loop_table_violation(add)) throw *err;
  const std::size_t n = add.rows();
  if (!labels.empty() && labels.size() != n) {
    throw Error(Errc::malformed, "expected " + std::to_string(n) + " labels, got " +
                                     std::to_string(labels.size()));
  }
  FiniteLoop loop;
  loop.ldiff_ = Table(n, n);
  loop.rdiff_ = Table(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      loop.ldiff_(a, add(a, x)) = static_cast<Element>(x);  // a + x = b
      loop.rdiff_(add(x, a), a) = static_cast<Element>(x);  // x + a = b
    }
  }
  loop.associative_ = true;
  loop.commutative_ = true;
  for (std::size_t a = 0; a < n && (loop.associative_ || loop.commutative_); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) loop.commutative_ = false;
      for (std::size_t c = 0; c < n && loop.associative_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) loop.associative_ = false;
      }
    }
  }
  loop.add_ = std::move(add);
  loop.labels_ = std::move(labels);
  return loop;
}

FiniteLoop FiniteLoop::cyclic(std::size_t n) {
  Table t(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Element>((a + b) % n);
  }
  return from_table(std::move(t));
}

FiniteLoop FiniteLoop::product(const FiniteLoop& lhs, const FiniteLoop& rhs) {
  const std::size_t m = rhs.order();
  const std::size_t n = lhs.order() * m;
  Table t(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t(x, y) = static_cast<Element>(lhs.add(static_cast<Element>(x / m), static_cast<Element>(y / m)) * m +
                                     rhs.add(static_cast<Element>(x % m), static_cast<Element>(y % m)));
    }
  }
  return from_table(std::move(t));
}

ElementSet left_translate(const FiniteLoop& loop, Element a, const ElementSet& k) {
  ElementSet out(loop.order());
  k.for_each([&](Element x) { out.insert(loop.add(a, x)); });
  return out;
}

ElementSet right_translate(const FiniteLoop& loop, const ElementSet& k, Element a) {
  ElementSet out(loop.order());
  k.for_each([&](Element x) { out.insert(loop.add(x, a)); });
  return out;
}

ElementSet sumset(const FiniteLoop& loop, const ElementSet& a, const ElementSet& b) {
  ElementSet out(loop.order());
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(loop.add(x, y)); }); });
  return out;
}

bool is_subloop(const FiniteLoop& loop, const ElementSet& s) {
  if (s.empty()) throw Error(Errc::empty_set, "subloop candidate is empty");
  const auto m = s.members();
  for (Element a : m) {
    for (Element b : m) {
      if (!s.contains(loop.add(a, b)) || !s.contains(loop.left_difference(a, b)) ||
          !s.contains(loop.right_difference(a, b))) {
        return false;
      }
    }
  }
  return true;
}

ElementSet generated_subloop(const FiniteLoop& loop, const ElementSet& seed, const Table* action) {
  ElementSet s(loop.order());
  std::vector<Element> list;
  auto push = [&](Element e) {
    if (!s.contains(e)) {
      s.insert(e);
      list.push_back(e);
    }
  };
  push(0);
  seed.for_each(push);
  // Each unordered pair is combined once, when its later member is reached.
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Element a = list[i];
    if (action != nullptr) {
      for (std::size_t r = 0; r < action->rows(); ++r) push((*action)(r, a));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Element b = list[j];
      push(loop.add(a, b));
      push(loop.add(b, a));
      push(loop.left_difference(a, b));
      push(loop.left_difference(b, a));
      push(loop.right_difference(a, b));
      push(loop.right_difference(b, a));
    }
  }
  return s;
}

bool is_normal_subloop(const FiniteLoop& loop, const ElementSet& k) {
  if (k.empty() || !is_subloop(loop, k)) {
    throw Error(Errc::not_a_subloop, k.to_string() + " is not a subloop");
  }
  const std::size_t n = loop.order();
  std::vector<ElementSet> left(n), right(n);
  for (Element a = 0; a < n; ++a) {
    left[a] = left_translate(loop, a, k);
    right[a] = right_translate(loop, k, a);
    if (left[a] != right[a]) return false;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = loop.add(a, b);
      if (left[ab] != left_translate(loop, a, left[b])) return false;
      if (right_translate(loop, right[a], b) != right[ab]) return false;
    }
  }
  return true;
}

std::vector<Element> coset_labels(const FiniteLoop& loop, const ElementSet& k) {
  const std::size_t n = loop.order();
  constexpr Element unset = ~Element{0};
  std::vector<Element> label(n, unset);
  Element next = 0;
  for (Element x = 0; x < n; ++x) {
    if (label[x] != unset) continue;
    left_translate(loop, x, k).for_each([&](Element y) { label[y] = next; });
    ++next;
  }
  return label;
}

LoopQuotient quotient_loop(const FiniteLoop& loop, const ElementSet& k) {
  bool normal = false;
  try {
    normal = is_normal_subloop(loop, k);
  } catch (const Error&) {
    normal = false;
  }
  if (!normal) throw Error(Errc::not_normal, k.to_string() + " is not a normal subloop");

  ElementMap projection = coset_labels(loop, k);
  const std::size_t m = *std::max_element(projection.begin(), projection.end()) + 1;
  ElementMap reps(m);
  for (Element x = static_cast<Element>(loop.order()); x-- > 0;) reps[projection[x]] = x;
  Table t(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t(i, j) = projection[loop.add(reps[i], reps[j])];
  }
  return {FiniteLoop::from_table(std::move(t)), std::move(projection), std::move(reps)};
}

std::optional<Witness> loop_hom_violation(const FiniteLoop& domain, const FiniteLoop& codomain,
                                          std::span<const Element> map) {
  if (map.size() != domain.order()) return Witness{"map_size", {static_cast<Element>(map.size())}};
  for (Element a = 0; a < map.size(); ++a) {
    if (map[a] >= codomain.order()) return Witness{"map_range", {a}};
  }
  for (Element a = 0; a < domain.order(); ++a) {
    for (Element b = 0; b < domain.order(); ++b) {
      if (map[domain.add(a, b)] != codomain.add(map[a], map[b])) {
        return Witness{"phi(a+b)=phi(a)+phi(b)", {a, b}};
      }
    }
  }
  return std::nullopt;
}

void require_loop_hom(const FiniteLoop& domain, const FiniteLoop& codomain,
                      std::span<const Element> map) {
  if (auto w = loop_hom_violation(domain, codomain, map)) {
    throw Error(Errc::not_a_homomorphism, "map is not a loop homomorphism", *w);
  }
}

ElementSet kernel(std::span<const Element> map) {
  ElementSet out(map.size());
  for (Element a = 0; a < map.size(); ++a) {
    if (map[a] == 0) out.insert(a);
  }
  return out;
}

ElementSet image(const FiniteLoop& codomain, std::span<const Element> map) {
  ElementSet out(codomain.order());
  for (Element v : map) out.insert(v);
  return out;
}

namespace {

// Backtracking over maps with f(0) = 0, checking additivity on every pair
// whose sum is already assigned.
class HomSearch {
 public:
  HomSearch(const FiniteLoop& g, const FiniteLoop& h, bool injective,
            const std::function<bool(const ElementMap&)>& visit)
      : g_(g), h_(h), injective_(injective), visit_(visit),
        map_(g.order(), 0), used_(h.order(), 0) {}

  void run() {
    if (injective_ && g_.order() > h_.order()) return;
    used_[0] = 1;
    if (consistent(0)) extend(1);
  }

 private:
  bool consistent(Element k) const {
    for (Element a = 0; a <= k; ++a) {
      for (Element b = 0; b <= k; ++b) {
        const Element s = g_.add(a, b);
        if (s > k || (a != k && b != k && s != k)) continue;
        if (map_[s] != h_.add(map_[a], map_[b])) return false;
      }
    }
    return true;
  }

  bool extend(Element k) {
    if (k == g_.order()) return visit_(map_);
    for (Element v = 0; v < h_.order(); ++v) {
      if (injective_ && used_[v]) continue;
      map_[k] = v;
      used_[v] = 1;
      if (consistent(k) && !extend(k + 1)) return false;
      used_[v] = 0;
    }
    return true;
  }

  const FiniteLoop& g_;
  const FiniteLoop& h_;
  bool injective_;
  const std::function<bool(const ElementMap&)>& visit_;
  ElementMap map_;
  std::vector<char> used_;
};

}  // namespace

void for_each_loop_hom(const FiniteLoop& domain, const FiniteLoop& codomain,
                       const std::function<bool(const ElementMap&)>& visit) {
  HomSearch(domain, codomain, false, visit).run();
}

std::vector<ElementMap> all_loop_homs(const FiniteLoop& domain, const FiniteLoop& codomain) {
  std::vector<ElementMap> out;
  for_each_loop_hom(domain, codomain, [&](const ElementMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<ElementMap> loops_isomorphic(const FiniteLoop& lhs, const FiniteLoop& rhs) {
  if (lhs.order() != rhs.order()) return std::nullopt;
  if (lhs.associative() != rhs.associative() || lhs.commutative() != rhs.commutative()) {
    return std::nullopt;
  }
  std::optional<ElementMap> found;
  std::function<bool(const ElementMap&)> visit = [&](const ElementMap& m) {
    found = m;
    return false;
  };
  HomSearch(lhs, rhs, true, visit).run();
  return found;
}

std::vector<ElementSet> closure_lattice(const FiniteLoop& loop, const Table* action) {
  const std::size_t n = loop.order();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> family;
  std::deque<std::size_t> pending;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) {
      family.push_back(std::move(s));
      pending.push_back(family.size() - 1);
    }
  };
  add(generated_subloop(loop, ElementSet(n), action));
  for (Element a = 1; a < n; ++a) {
    add(generated_subloop(loop, ElementSet::singleton(n, a), action));
    for (Element b = a + 1; b < n; ++b) {
      add(generated_subloop(loop, ElementSet(n, {a, b}), action));
    }
  }
  // Close the family under joins.
  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop_front();
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const ElementSet& a = family[i];
      const ElementSet& b = family[j];
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      add(generated_subloop(loop, a | b, action));
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<ElementSet> all_subloops(const FiniteLoop& loop) { return closure_lattice(loop); }

std::vector<ElementSet> all_normal_subloops(const FiniteLoop& loop) {
  std::vector<ElementSet> out;
  for (auto& s : all_subloops(loop)) {
    if (is_normal_subloop(loop, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ElementSet> maximal_proper(std::span<const ElementSet> family, const ElementSet& whole) {
  std::vector<ElementSet> out;
  for (const auto& s : family) {
    if (s == whole) continue;
    const bool dominated = std::any_of(family.begin(), family.end(), [&](const ElementSet& t) {
      return t != whole && t != s && s.is_subset_of(t);
    });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteLoop relabel(const FiniteLoop& loop, std::span<const Element> perm) {
  const std::size_t n = loop.order();
  Table t(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t(perm[a], perm[b]) = perm[loop.add(a, b)];
  }
  return FiniteLoop::from_table(std::move(t));
}

}  // namespace lnr
