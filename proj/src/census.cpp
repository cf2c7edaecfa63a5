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

#include "lnr/census.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace lnr {

namespace {

// Compares the relabelled tables against `best` entry by entry, stopping at
// the first difference. Returns <0, 0 or >0 like memcmp; when <0 and `out`
// is given, the full relabelled bytes are written to it.
int compare_relabelled(std::span<const Table* const> tables, std::span<const Element> perm,
                       std::span<const Element> inverse, const CanonicalForm& best,
                       CanonicalForm* out) {
  const std::size_t n = perm.size();
  std::size_t k = 0;
  int cmp = 0;
  for (const Table* t : tables) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++k) {
        const auto v = static_cast<std::uint8_t>(perm[(*t)(inverse[i], inverse[j])]);
        if (cmp == 0) {
          if (v > best[k]) return 1;
          if (v < best[k]) {
            if (out == nullptr) return -1;
            cmp = -1;
          }
        }
        if (out != nullptr) (*out)[k] = v;
      }
    }
  }
  return cmp;
}

CanonicalForm bytes_of(std::span<const Table* const> tables) {
  CanonicalForm out;
  for (const Table* t : tables) {
    for (Element v : t->data()) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

void check_canonical_order(std::size_t n) {
  if (n > kCanonicalFormMaxOrder) {
    throw Error(Errc::order_cap_exceeded,
                "canonical form limited to order " + std::to_string(kCanonicalFormMaxOrder));
  }
}

// Minimum over every permutation fixing 0.
CanonicalForm minimise(std::span<const Table* const> tables, std::size_t n) {
  check_canonical_order(n);
  CanonicalForm best = bytes_of(tables);
  CanonicalForm scratch(best.size());
  ElementMap perm(n), inverse(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end())) {
    for (Element i = 0; i < n; ++i) inverse[perm[i]] = i;
    if (compare_relabelled(tables, perm, inverse, best, &scratch) < 0) best.swap(scratch);
  }
  return best;
}

// True when no relabelling from `perms` gives smaller bytes.
bool is_minimal(std::span<const Table* const> tables, const std::vector<ElementMap>& perms) {
  const CanonicalForm own = bytes_of(tables);
  ElementMap inverse;
  for (const auto& p : perms) {
    inverse.assign(p.size(), 0);
    for (Element i = 0; i < p.size(); ++i) inverse[p[i]] = i;
    if (compare_relabelled(tables, p, inverse, own, nullptr) < 0) return false;
  }
  return true;
}

std::vector<ElementMap> zero_fixing_permutations(std::size_t n) {
  std::vector<ElementMap> out;
  ElementMap perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

class SquareSearch {
 public:
  SquareSearch(std::size_t n, FillOrder fill, std::function<bool(const Table&)> emit)
      : n_(n), table_(n, n), row_used_(n, 0), col_used_(n, 0), emit_(std::move(emit)) {
    for (Element i = 0; i < n; ++i) {
      table_(0, i) = i;
      table_(i, 0) = i;
      row_used_[i] |= 1u << i;
      col_used_[i] |= 1u << i;
    }
    for (Element a = 1; a < n; ++a) {
      for (Element b = 1; b < n; ++b) {
        cells_.emplace_back(fill == FillOrder::row_major ? std::pair{a, b} : std::pair{b, a});
      }
    }
  }

  void run() { extend(0); }

 private:
  bool extend(std::size_t k) {
    if (k == cells_.size()) return emit_(table_);
    const auto [r, c] = cells_[k];
    const std::uint32_t blocked = row_used_[r] | col_used_[c];
    for (Element v = 0; v < n_; ++v) {
      const std::uint32_t bit = 1u << v;
      if (blocked & bit) continue;
      table_(r, c) = v;
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      const bool more = extend(k + 1);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
      if (!more) return false;
    }
    return true;
  }

  std::size_t n_;
  Table table_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  std::vector<std::pair<Element, Element>> cells_;
  std::function<bool(const Table&)> emit_;
};

// Assigns x -> x*k column by column from the endomorphisms of (N,+).
class MultiplicationSearch {
 public:
  MultiplicationSearch(const FiniteLoop& g, const CensusFilters& f,
                       std::function<bool(const Table&)> emit)
      : g_(g), n_(g.order()), filters_(f), emit_(std::move(emit)) {
    endos_ = all_loop_homs(g, g);
    col_.assign(n_, nullptr);
  }

  void run() {
    if (!filters_.unital) {
      identity_.reset();
      extend(0);
      return;
    }
    for (Element e = 0; e < n_; ++e) {
      identity_ = e;
      if (!extend(0)) return;
    }
  }

 private:
  bool allowed(Element k, const ElementMap& endo) const {
    if (filters_.zero_symmetric && k == 0 &&
        std::any_of(endo.begin(), endo.end(), [](Element v) { return v != 0; })) {
      return false;
    }
    if (identity_) {
      if (endo[*identity_] != k) return false;
      if (k == *identity_) {
        for (Element x = 0; x < n_; ++x) {
          if (endo[x] != x) return false;
        }
      }
    }
    return true;
  }

  // rho_{b*c} = rho_c o rho_b for every pair whose three indices are
  // assigned and one of which is k.
  bool associative_upto(Element k) const {
    for (Element b = 0; b <= k; ++b) {
      for (Element c = 0; c <= k; ++c) {
        const Element d = (*col_[c])[b];
        if (d > k || (b != k && c != k && d != k)) continue;
        for (Element x = 0; x < n_; ++x) {
          if ((*col_[d])[x] != (*col_[c])[(*col_[b])[x]]) return false;
        }
      }
    }
    return true;
  }

  bool extend(Element k) {
    if (k == n_) {
      Table mul(n_, n_);
      for (Element x = 0; x < n_; ++x) {
        for (Element c = 0; c < n_; ++c) mul(x, c) = (*col_[c])[x];
      }
      return emit_(mul);
    }
    for (const auto& endo : endos_) {
      if (!allowed(k, endo)) continue;
      col_[k] = &endo;
      if (associative_upto(k) && !extend(k + 1)) return false;
    }
    col_[k] = nullptr;
    return true;
  }

  const FiniteLoop& g_;
  std::size_t n_;
  CensusFilters filters_;
  std::function<bool(const Table&)> emit_;
  std::vector<ElementMap> endos_;
  std::vector<const ElementMap*> col_;
  std::optional<Element> identity_;
};

bool passes(const LoopNearRing& n, const CensusFilters& f) {
  if (f.unital && !n.unital()) return false;
  if (f.zero_symmetric && !n.zero_symmetric()) return false;
  if (f.non_associative_add && n.additive().associative()) return false;
  if (f.not_left_distributive && n.left_distributive()) return false;
  if (f.near_field && !(n.unital() && n.order() >= 2 && is_near_field(n))) return false;
  if (f.local) {
    if (!(n.unital() && n.zero_symmetric() && n.order() >= 2)) return false;
    if (!localness(n).local) return false;
  }
  return true;
}

}  // namespace

CanonicalForm canonical_form(const FiniteLoop& loop) {
  const Table* tables[] = {&loop.table()};
  return minimise(tables, loop.order());
}

CanonicalForm canonical_form(const LoopNearRing& ring) {
  const Table* tables[] = {&ring.additive().table(), &ring.mul_table()};
  return minimise(tables, ring.order());
}

std::size_t enumerate_loops(const CensusQuery& q, const std::function<bool(const FiniteLoop&)>& visit) {
  if (q.order == 0) throw Error(Errc::precondition_violated, "order must be positive");
  if (q.order > q.caps.max_loop_order || q.order > 32) {
    throw Error(Errc::order_cap_exceeded, "loop order " + std::to_string(q.order) +
                                              " exceeds the cap " +
                                              std::to_string(q.caps.max_loop_order));
  }
  const std::size_t limit = q.limit.value_or(SIZE_MAX);
  if (limit == 0) return 0;
  std::vector<ElementMap> perms;
  if (q.up_to_iso) {
    check_canonical_order(q.order);
    perms = zero_fixing_permutations(q.order);
  }
  std::size_t emitted = 0;
  SquareSearch search(q.order, q.fill, [&](const Table& t) {
    if (q.up_to_iso) {
      const Table* tables[] = {&t};
      if (!is_minimal(tables, perms)) return true;
    }
    FiniteLoop loop = FiniteLoop::from_table(t);
    if (q.filters.non_associative_add && loop.associative()) return true;
    ++emitted;
    return visit(loop) && emitted < limit;
  });
  search.run();
  return emitted;
}

std::size_t enumerate_near_rings(const CensusQuery& q,
                                 const std::function<bool(const LoopNearRing&)>& visit) {
  const std::size_t limit = q.limit.value_or(SIZE_MAX);
  if (!q.additive) {
    CensusQuery loops = q;
    loops.kind = CensusQuery::Kind::loops;
    loops.up_to_iso = true;
    loops.limit.reset();
    loops.filters = {};
    loops.filters.non_associative_add = q.filters.non_associative_add;
    loops.caps.max_loop_order = q.caps.max_additive_order;
    std::vector<FiniteLoop> additives;
    enumerate_loops(loops, [&](const FiniteLoop& g) {
      additives.push_back(g);
      return true;
    });
    std::size_t emitted = 0;
    for (auto& g : additives) {
      if (emitted >= limit) break;
      CensusQuery sub = q;
      sub.additive = std::move(g);
      sub.limit = limit - emitted;
      emitted += enumerate_near_rings(sub, visit);
    }
    return emitted;
  }

  const FiniteLoop& g = *q.additive;
  if (g.order() > q.caps.max_additive_order) {
    throw Error(Errc::order_cap_exceeded, "additive order " + std::to_string(g.order()) +
                                              " exceeds the cap " +
                                              std::to_string(q.caps.max_additive_order));
  }
  if (limit == 0) return 0;
  if (q.filters.non_associative_add && g.associative()) return 0;

  std::vector<ElementMap> automorphisms;
  if (q.up_to_iso) {
    for (auto& h : all_loop_homs(g, g)) {
      ElementMap sorted = h;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        automorphisms.push_back(std::move(h));
      }
    }
  }
  std::size_t emitted = 0;
  bool stopped = false;
  MultiplicationSearch search(g, q.filters, [&](const Table& mul) {
    if (q.up_to_iso) {
      const Table* tables[] = {&mul};
      if (!is_minimal(tables, automorphisms)) return true;
    }
    LoopNearRing ring = LoopNearRing::from_parts(g, mul);
    if (!passes(ring, q.filters)) return true;
    ++emitted;
    if (!visit(ring)) stopped = true;
    return !stopped && emitted < limit;
  });
  search.run();
  return emitted;
}

std::size_t count_reduced_squares(std::size_t order, FillOrder fill) {
  if (order == 0 || order > 32) throw Error(Errc::order_cap_exceeded, "order out of range");
  std::size_t count = 0;
  SquareSearch search(order, fill, [&](const Table&) {
    ++count;
    return true;
  });
  search.run();
  return count;
}

SpecimenAnalysis analyze_specimen(const FiniteLoop& loop) {
  SpecimenAnalysis a;
  a.order = loop.order();
  a.associative_add = loop.associative();
  a.commutative_add = loop.commutative();
  return a;
}

SpecimenAnalysis analyze_specimen(const LoopNearRing& ring) {
  SpecimenAnalysis a = analyze_specimen(ring.additive());
  a.genuine_loop = !a.associative_add;
  a.left_distributive = ring.left_distributive();
  a.unital = ring.unital();
  a.zero_symmetric = ring.zero_symmetric();
  a.ring = ring.is_ring();
  if (ring.unital()) a.near_field = ring.order() >= 2 && is_near_field(ring);
  if (ring.unital() && ring.zero_symmetric() && ring.order() >= 2) {
    LocalnessReport l = localness(ring);
    a.local = l.local;
    a.m = l.m;
    a.radicals = std::move(l.radicals);
  }
  return a;
}

std::vector<Specimen> find_specimens(const CensusQuery& q, unsigned threads) {
  std::vector<std::variant<FiniteLoop, LoopNearRing>> found;
  if (q.kind == CensusQuery::Kind::loops) {
    enumerate_loops(q, [&](const FiniteLoop& l) {
      found.emplace_back(l);
      return true;
    });
  } else {
    enumerate_near_rings(q, [&](const LoopNearRing& n) {
      found.emplace_back(n);
      return true;
    });
  }

  std::vector<std::optional<Specimen>> slots(found.size());
  std::vector<std::exception_ptr> failures(std::max(1u, threads));
  auto work = [&](std::size_t start, std::size_t stride) {
    try {
      for (std::size_t i = start; i < found.size(); i += stride) {
        slots[i] = std::visit(
            [](const auto& s) { return Specimen{s, canonical_form(s), analyze_specimen(s)}; },
            found[i]);
      }
    } catch (...) {
      failures[start] = std::current_exception();
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, found.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return slots[a]->form < slots[b]->form; });
  std::vector<Specimen> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(std::move(*slots[i]));
  return out;
}

}  // namespace lnr
