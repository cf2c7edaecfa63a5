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

#include "lnr/module.hpp"

#include <algorithm>

namespace lnr {

namespace {

bool safe_is_subloop(const FiniteLoop& g, const ElementSet& s) {
  return !s.empty() && is_subloop(g, s);
}

bool safe_is_normal(const FiniteLoop& g, const ElementSet& s) {
  return safe_is_subloop(g, s) && is_normal_subloop(g, s);
}

// n(a+k) + K = na + K for every operator row n. K must be normal.
bool coset_condition(const FiniteLoop& g, const Table& left_action, const ElementSet& k) {
  const auto label = coset_labels(g, k);
  const auto km = k.members();
  for (std::size_t n = 0; n < left_action.rows(); ++n) {
    for (Element a = 0; a < g.order(); ++a) {
      const Element base = label[left_action(n, a)];
      for (Element x : km) {
        if (label[left_action(n, g.add(a, x))] != base) return false;
      }
    }
  }
  return true;
}

bool left_closed(const Table& left_action, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Element a) {
    for (std::size_t n = 0; n < left_action.rows() && ok; ++n) ok = s.contains(left_action(n, a));
  });
  return ok;
}

bool right_closed(const Table& right_action, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Element a) {
    for (std::size_t m = 0; m < right_action.cols() && ok; ++m) ok = s.contains(right_action(a, m));
  });
  return ok;
}

bool left_submodule(const FiniteLoop& g, const Table& left_action, const ElementSet& k) {
  return safe_is_normal(g, k) && coset_condition(g, left_action, k);
}

bool left_subloop(const FiniteLoop& g, const Table& left_action, const ElementSet& i) {
  return safe_is_subloop(g, i) && left_closed(left_action, i);
}

Table transpose(const Table& t) {
  Table out(t.cols(), t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) out(c, r) = t(r, c);
  }
  return out;
}

LoopNearRing zero_near_ring() {
  return LoopNearRing::from_tables(Table(1, 1), Table(1, 1));
}

}  // namespace

std::optional<Witness> left_action_violation(const LoopNearRing& ring, const FiniteLoop& carrier,
                                             const Table& action) {
  const std::size_t nn = ring.order();
  const std::size_t ng = carrier.order();
  if (action.rows() != nn || action.cols() != ng) {
    return Witness{"action_shape", {static_cast<Element>(action.rows()),
                                    static_cast<Element>(action.cols())}};
  }
  for (Element n = 0; n < nn; ++n) {
    for (Element a = 0; a < ng; ++a) {
      if (action(n, a) >= ng) return Witness{"action_range", {n, a}};
    }
  }
  for (Element m = 0; m < nn; ++m) {
    for (Element n = 0; n < nn; ++n) {
      for (Element a = 0; a < ng; ++a) {
        if (action(m, action(n, a)) != action(ring.mul(m, n), a)) {
          return Witness{"m(na)=(mn)a", {m, n, a}};
        }
        if (action(ring.add(m, n), a) != carrier.add(action(m, a), action(n, a))) {
          return Witness{"(m+n)a=ma+na", {m, n, a}};
        }
      }
    }
  }
  if (ring.unital() && nn > 1) {
    for (Element a = 0; a < ng; ++a) {
      if (action(ring.one(), a) != a) return Witness{"1a=a", {a}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> right_action_violation(const LoopNearRing& ring, const FiniteLoop& carrier,
                                              const Table& action) {
  const std::size_t nm = ring.order();
  const std::size_t ng = carrier.order();
  if (action.rows() != ng || action.cols() != nm) {
    return Witness{"action_shape", {static_cast<Element>(action.rows()),
                                    static_cast<Element>(action.cols())}};
  }
  for (Element a = 0; a < ng; ++a) {
    for (Element m = 0; m < nm; ++m) {
      if (action(a, m) >= ng) return Witness{"action_range", {a, m}};
    }
  }
  for (Element a = 0; a < ng; ++a) {
    for (Element n = 0; n < nm; ++n) {
      for (Element m = 0; m < nm; ++m) {
        if (action(a, ring.mul(n, m)) != action(action(a, n), m)) {
          return Witness{"a(nm)=(an)m", {a, n, m}};
        }
      }
      for (Element b = 0; b < ng; ++b) {
        if (action(carrier.add(a, b), n) != carrier.add(action(a, n), action(b, n))) {
          return Witness{"(a+b)n=an+bn", {a, b, n}};
        }
      }
    }
  }
  if (ring.unital() && nm > 1) {
    for (Element a = 0; a < ng; ++a) {
      if (action(a, ring.one()) != a) return Witness{"a1=a", {a}};
    }
  }
  return std::nullopt;
}

LeftModule LeftModule::create(LoopNearRing ring, FiniteLoop carrier, Table action) {
  if (auto w = left_action_violation(ring, carrier, action)) {
    throw Error(Errc::action_law_violated, "left action law violated", *w);
  }
  return LeftModule(std::move(ring), std::move(carrier), std::move(action));
}

LeftModule LeftModule::regular(const LoopNearRing& ring) {
  return LeftModule(ring, ring.additive(), ring.mul_table());
}

LeftModule LeftModule::trivial(FiniteLoop carrier) {
  Table action(1, carrier.order(), 0);
  return create(zero_near_ring(), std::move(carrier), std::move(action));
}

LeftModule LeftModule::of_maps(const FiniteLoop& g, bool zero_fixing, std::size_t max_elements) {
  LoopNearRing ring = zero_fixing ? transformation_near_ring_zero(g, max_elements)
                                  : transformation_near_ring(g, max_elements);
  const auto maps = self_maps(g, zero_fixing);
  Table action(maps.size(), g.order());
  for (std::size_t f = 0; f < maps.size(); ++f) {
    for (std::size_t a = 0; a < g.order(); ++a) action(f, a) = maps[f][a];
  }
  return create(std::move(ring), g, std::move(action));
}

RightModule RightModule::create(LoopNearRing ring, FiniteLoop carrier, Table action) {
  if (auto w = right_action_violation(ring, carrier, action)) {
    throw Error(Errc::action_law_violated, "right action law violated", *w);
  }
  return RightModule(std::move(ring), std::move(carrier), std::move(action));
}

RightModule RightModule::regular(const LoopNearRing& ring) {
  return RightModule(ring, ring.additive(), ring.mul_table());
}

Bimodule Bimodule::create(std::optional<LeftModule> left, std::optional<RightModule> right) {
  if (!left && !right) throw Error(Errc::malformed, "bimodule needs at least one action");
  if (left && right) {
    if (!(left->carrier() == right->carrier())) {
      throw Error(Errc::malformed, "left and right actions use different carriers");
    }
    for (Element n = 0; n < left->ring().order(); ++n) {
      for (Element a = 0; a < left->order(); ++a) {
        for (Element m = 0; m < right->ring().order(); ++m) {
          if (right->act(left->act(n, a), m) != left->act(n, right->act(a, m))) {
            throw Error(Errc::action_law_violated, "actions are not compatible",
                        Witness{"(na)m=n(am)", {n, a, m}});
          }
        }
      }
    }
  }
  Bimodule b;
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  return b;
}

Bimodule Bimodule::regular(const LoopNearRing& ring) {
  Bimodule b;
  b.left_ = LeftModule::regular(ring);
  b.right_ = RightModule::regular(ring);
  return b;
}

const FiniteLoop& Bimodule::carrier() const {
  return left_ ? left_->carrier() : right_->carrier();
}

bool is_left_submodule(const LeftModule& m, const ElementSet& k) {
  return left_submodule(m.carrier(), m.action(), k);
}

bool is_left_subloop(const LeftModule& m, const ElementSet& i) {
  return left_subloop(m.carrier(), m.action(), i);
}

bool is_right_submodule(const RightModule& m, const ElementSet& k) {
  return safe_is_normal(m.carrier(), k) && right_closed(m.action(), k);
}

bool is_right_submodule(const Bimodule& g, const ElementSet& k, RightSubmoduleReading reading) {
  bool ok = g.right() ? is_right_submodule(*g.right(), k) : safe_is_normal(g.carrier(), k);
  if (ok && reading == RightSubmoduleReading::with_left_closure && g.left()) {
    ok = left_closed(g.left()->action(), k);
  }
  return ok;
}

bool is_right_subloop(const RightModule& m, const ElementSet& i) {
  return safe_is_subloop(m.carrier(), i) && right_closed(m.action(), i);
}

bool is_left_ideal(const LoopNearRing& n, const ElementSet& j) {
  return left_submodule(n.additive(), n.mul_table(), j);
}

bool is_right_ideal(const LoopNearRing& n, const ElementSet& j) {
  return safe_is_normal(n.additive(), j) && right_closed(n.mul_table(), j);
}

bool is_ideal(const LoopNearRing& n, const ElementSet& j) {
  return is_left_ideal(n, j) && right_closed(n.mul_table(), j);
}

std::vector<ElementSet> left_subloops(const LeftModule& m) {
  return closure_lattice(m.carrier(), &m.action());
}

std::vector<ElementSet> left_submodules(const LeftModule& m) {
  std::vector<ElementSet> out;
  for (auto& k : all_normal_subloops(m.carrier())) {
    if (coset_condition(m.carrier(), m.action(), k)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<ElementSet> right_subloops(const RightModule& m) {
  const Table operators = transpose(m.action());
  return closure_lattice(m.carrier(), &operators);
}

std::vector<ElementSet> right_submodules(const RightModule& m) {
  std::vector<ElementSet> out;
  for (auto& k : all_normal_subloops(m.carrier())) {
    if (right_closed(m.action(), k)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<ElementSet> left_ideals(const LoopNearRing& n) {
  std::vector<ElementSet> out;
  for (auto& k : all_normal_subloops(n.additive())) {
    if (coset_condition(n.additive(), n.mul_table(), k)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<ElementSet> ideals(const LoopNearRing& n) {
  std::vector<ElementSet> out;
  for (auto& k : left_ideals(n)) {
    if (right_closed(n.mul_table(), k)) out.push_back(std::move(k));
  }
  return out;
}

ModuleQuotient quotient_module(const LeftModule& m, const ElementSet& k) {
  if (!is_left_submodule(m, k)) {
    throw Error(Errc::not_a_submodule, k.to_string() + " is not a left submodule");
  }
  LoopQuotient q = quotient_loop(m.carrier(), k);
  const std::size_t cosets = q.loop.order();
  Table action(m.ring().order(), cosets);
  for (Element n = 0; n < m.ring().order(); ++n) {
    for (Element c = 0; c < cosets; ++c) action(n, c) = q.projection[m.act(n, q.representatives[c])];
  }
  LeftModule quotient = LeftModule::create(m.ring(), std::move(q.loop), std::move(action));
  return {std::move(quotient), std::move(q.projection), std::move(q.representatives)};
}

SubmoduleView restrict_to(const LeftModule& m, const ElementSet& i) {
  if (!is_left_subloop(m, i)) {
    throw Error(Errc::precondition_violated, i.to_string() + " is not a left subloop");
  }
  ElementMap embedding = i.members();
  std::vector<Element> index(m.order(), 0);
  for (Element x = 0; x < embedding.size(); ++x) index[embedding[x]] = x;
  const std::size_t k = embedding.size();
  Table add(k, k);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) add(a, b) = index[m.carrier().add(embedding[a], embedding[b])];
  }
  Table action(m.ring().order(), k);
  for (Element n = 0; n < m.ring().order(); ++n) {
    for (Element a = 0; a < k; ++a) action(n, a) = index[m.act(n, embedding[a])];
  }
  return {LeftModule::create(m.ring(), FiniteLoop::from_table(std::move(add)), std::move(action)),
          std::move(embedding)};
}

std::optional<Witness> module_hom_violation(const LeftModule& domain, const LeftModule& codomain,
                                            std::span<const Element> map) {
  if (!(domain.ring() == codomain.ring())) return Witness{"same_near_ring", {}};
  if (auto w = loop_hom_violation(domain.carrier(), codomain.carrier(), map)) return w;
  for (Element n = 0; n < domain.ring().order(); ++n) {
    for (Element a = 0; a < domain.order(); ++a) {
      if (map[domain.act(n, a)] != codomain.act(n, map[a])) return Witness{"phi(na)=n phi(a)", {n, a}};
    }
  }
  return std::nullopt;
}

void require_module_hom(const LeftModule& domain, const LeftModule& codomain,
                        std::span<const Element> map) {
  if (auto w = module_hom_violation(domain, codomain, map)) {
    throw Error(Errc::not_a_homomorphism, "map is not a left module homomorphism", *w);
  }
  const ElementSet k = kernel(map);
  const ElementSet i = image(codomain.carrier(), map);
  if (!is_left_submodule(domain, k)) {
    throw Error(Errc::not_a_submodule, "kernel " + k.to_string() + " is not a left submodule");
  }
  if (!is_left_subloop(codomain, i)) {
    throw Error(Errc::precondition_violated, "image " + i.to_string() + " is not a left subloop");
  }
}

ElementMap orbit_map(const LeftModule& m, Element b) {
  ElementMap out(m.ring().order());
  for (Element n = 0; n < out.size(); ++n) out[n] = m.act(n, b);
  return out;
}

ElementSet colon(const LeftModule& m, const ElementSet& a, const ElementSet& b) {
  ElementSet out(m.ring().order());
  for (Element n = 0; n < m.ring().order(); ++n) {
    bool inside = true;
    b.for_each([&](Element x) { inside = inside && a.contains(m.act(n, x)); });
    if (inside) out.insert(n);
  }
  return out;
}

ElementSet annihilator(const LeftModule& m, const ElementSet& b) {
  return colon(m, m.carrier().zero(), b);
}

std::string_view to_string(SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::subloop: return "subloop";
    case SubstructureKind::normal_subloop: return "normal_subloop";
    case SubstructureKind::left_subloop: return "left_subloop";
    case SubstructureKind::left_submodule: return "left_submodule";
    case SubstructureKind::right_subloop: return "right_subloop";
    case SubstructureKind::right_submodule: return "right_submodule";
  }
  return "unknown";
}

bool satisfies(const LeftModule& m, const ElementSet& s, SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::subloop: return safe_is_subloop(m.carrier(), s);
    case SubstructureKind::normal_subloop: return safe_is_normal(m.carrier(), s);
    case SubstructureKind::left_subloop: return is_left_subloop(m, s);
    case SubstructureKind::left_submodule: return is_left_submodule(m, s);
    default: break;
  }
  throw Error(Errc::precondition_violated,
              std::string(to_string(kind)) + " is not a substructure kind of a left module");
}

bool satisfies(const RightModule& m, const ElementSet& s, SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::subloop: return safe_is_subloop(m.carrier(), s);
    case SubstructureKind::normal_subloop: return safe_is_normal(m.carrier(), s);
    case SubstructureKind::right_subloop: return is_right_subloop(m, s);
    case SubstructureKind::right_submodule: return is_right_submodule(m, s);
    default: break;
  }
  throw Error(Errc::precondition_violated,
              std::string(to_string(kind)) + " is not a substructure kind of a right module");
}

namespace {

template <class Module>
ElementSet intersect_impl(const Module& m, std::span<const ElementSet> family, SubstructureKind kind) {
  for (const auto& s : family) {
    if (!satisfies(m, s, kind)) {
      throw Error(Errc::precondition_violated,
                  s.to_string() + " is not a " + std::string(to_string(kind)));
    }
  }
  ElementSet out = intersect_all(m.order(), family);
  if (!satisfies(m, out, kind)) {
    throw Error(Errc::precondition_violated,
                "intersection " + out.to_string() + " is not a " + std::string(to_string(kind)));
  }
  return out;
}

}  // namespace

ElementSet intersect_substructures(const LeftModule& m, std::span<const ElementSet> family,
                                   SubstructureKind kind) {
  return intersect_impl(m, family, kind);
}

ElementSet intersect_substructures(const RightModule& m, std::span<const ElementSet> family,
                                   SubstructureKind kind) {
  return intersect_impl(m, family, kind);
}

CorrespondenceReport check_correspondence(const LeftModule& domain, const LeftModule& codomain,
                                          std::span<const Element> map) {
  if (auto w = module_hom_violation(domain, codomain, map)) {
    throw Error(Errc::not_a_homomorphism, "map is not a left module homomorphism", *w);
  }
  CorrespondenceReport rep;
  rep.kernel = kernel(map);
  rep.image = image(codomain.carrier(), map);

  if (!is_left_submodule(domain, rep.kernel)) {
    rep.problems.push_back("kernel is not a left submodule");
    return rep;
  }
  if (!is_left_subloop(codomain, rep.image)) {
    rep.problems.push_back("image is not a left subloop");
    return rep;
  }
  const ModuleQuotient quotient = quotient_module(domain, rep.kernel);
  const SubmoduleView im = restrict_to(codomain, rep.image);

  // The induced map G/ker -> im, in renumbered image indices.
  std::vector<Element> image_index(codomain.order(), 0);
  for (Element x = 0; x < im.embedding.size(); ++x) image_index[im.embedding[x]] = x;
  ElementMap induced(quotient.module.order());
  for (Element c = 0; c < induced.size(); ++c) {
    induced[c] = image_index[map[quotient.representatives[c]]];
  }
  ElementMap sorted = induced;
  std::sort(sorted.begin(), sorted.end());
  const bool bijective = induced.size() == im.module.order() &&
                         std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.induced_isomorphism = bijective && is_module_hom(quotient.module, im.module, induced);
  if (!rep.induced_isomorphism) rep.problems.push_back("induced map is not an isomorphism");

  auto match = [&](const std::vector<ElementSet>& in_image, const std::vector<ElementSet>& in_domain,
                   std::vector<CorrespondencePair>& pairs, const char* what) {
    std::vector<ElementSet> above_kernel;
    for (const auto& s : in_domain) {
      if (rep.kernel.is_subset_of(s)) above_kernel.push_back(s);
    }
    std::vector<ElementSet> hit;
    bool ok = true;
    for (const auto& local : in_image) {
      ElementSet s = image_of(codomain.order(), im.embedding, local);
      ElementSet pre = preimage_of(map, s);
      if (std::find(above_kernel.begin(), above_kernel.end(), pre) == above_kernel.end()) {
        rep.problems.push_back(std::string("preimage of ") + what + " " + s.to_string() +
                               " is not a " + what + " containing the kernel");
        ok = false;
      }
      if (image_of(codomain.order(), map, pre) != s) {
        rep.problems.push_back(std::string("phi(phi^-1(S)) != S for ") + s.to_string());
        ok = false;
      }
      hit.push_back(pre);
      pairs.push_back({std::move(s), std::move(pre)});
    }
    std::sort(hit.begin(), hit.end());
    if (std::adjacent_find(hit.begin(), hit.end()) != hit.end() || hit.size() != above_kernel.size()) {
      rep.problems.push_back(std::string(what) + " counts differ: " + std::to_string(in_image.size()) +
                             " in image, " + std::to_string(above_kernel.size()) +
                             " above the kernel");
      ok = false;
    }
    return ok;
  };
  rep.subloops_biject = match(left_subloops(im.module), left_subloops(domain), rep.subloop_pairs,
                              "left subloop");
  rep.submodules_biject = match(left_submodules(im.module), left_submodules(domain),
                                rep.submodule_pairs, "left submodule");
  return rep;
}

SumReport check_k_plus_i(const LeftModule& m, const ElementSet& k, const ElementSet& i) {
  if (!is_left_submodule(m, k)) {
    throw Error(Errc::precondition_violated, k.to_string() + " is not a left submodule");
  }
  if (!is_left_subloop(m, i)) {
    throw Error(Errc::precondition_violated, i.to_string() + " is not a left subloop");
  }
  SumReport rep;
  rep.k_plus_i = sumset(m.carrier(), k, i);
  rep.i_plus_k = sumset(m.carrier(), i, k);
  rep.commute = rep.k_plus_i == rep.i_plus_k;
  rep.sum_is_left_subloop = is_left_subloop(m, rep.k_plus_i);
  const ModuleQuotient q = quotient_module(m, k);
  rep.preimage = preimage_of(q.projection, image_of(q.module.order(), q.projection, i));
  rep.equals_preimage = rep.preimage == rep.k_plus_i;
  return rep;
}

}  // namespace lnr
