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

#include "lnr/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace lnr {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::not_latin_square: return "NotLatinSquare";
    case Errc::no_two_sided_zero: return "NoTwoSidedZero";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_a_subloop: return "NotASubloop";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_a_homomorphism: return "NotAHomomorphism";
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_right_distributive: return "NotRightDistributive";
    case Errc::no_identity: return "NoIdentity";
    case Errc::not_unital: return "NotUnital";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::action_law_violated: return "ActionLawViolated";
    case Errc::not_a_submodule: return "NotASubmodule";
    case Errc::not_an_ideal: return "NotAnIdeal";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::trivial_module: return "TrivialModule";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::malformed: return "Malformed";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::io: return "IoError";
  }
  return "Unknown";
}

std::string Witness::describe() const {
  std::ostringstream os;
  os << law << " (";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != 0) os << ", ";
    os << elements[i];
  }
  os << ")";
  return os.str();
}

namespace {
std::string compose_message(Errc code, const std::string& message,
                            const std::optional<Witness>& witness) {
  std::string out(to_string(code));
  if (!message.empty()) out += ": " + message;
  if (witness) out += " [witness: " + witness->describe() + "]";
  return out;
}
}  // namespace

Error::Error(Errc code, std::string message, std::optional<Witness> witness)
    : std::runtime_error(compose_message(code, message, witness)),
      code_(code),
      message_(std::move(message)),
      witness_(std::move(witness)) {}

Table Table::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Table t(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::malformed, "table row " + std::to_string(r) + " has " +
                                       std::to_string(rows[r].size()) + " entries, expected " +
                                       std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), t.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return t;
}

std::vector<std::vector<Element>> Table::to_rows() const {
  std::vector<std::vector<Element>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

ElementSet::ElementSet(std::size_t carrier_order, std::initializer_list<Element> members)
    : ElementSet(carrier_order) {
  for (Element e : members) insert(e);
}

ElementSet::ElementSet(std::size_t carrier_order, std::span<const Element> members)
    : ElementSet(carrier_order) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t carrier_order) {
  ElementSet s(carrier_order);
  for (std::size_t e = 0; e < carrier_order; ++e) s.insert(static_cast<Element>(e));
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void ElementSet::insert(Element e) {
  if (e >= order_) {
    throw Error(Errc::malformed, "element " + std::to_string(e) + " outside carrier of order " +
                                     std::to_string(order_));
  }
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void ElementSet::erase(Element e) {
  if (e < order_) words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~theirs) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(order_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  }
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.order_ > order_) {
    order_ = other.order_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ order_;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

ElementSet intersect_all(std::size_t carrier_order, std::span<const ElementSet> family) {
  ElementSet out = ElementSet::full(carrier_order);
  for (const auto& s : family) out &= s;
  return out;
}

ElementSet image_of(std::size_t codomain_order, std::span<const Element> map, const ElementSet& s) {
  ElementSet out(codomain_order);
  s.for_each([&](Element e) { out.insert(map[e]); });
  return out;
}

ElementSet preimage_of(std::span<const Element> map, const ElementSet& s) {
  ElementSet out(map.size());
  for (std::size_t e = 0; e < map.size(); ++e) {
    if (s.contains(map[e])) out.insert(static_cast<Element>(e));
  }
  return out;
}

}  // namespace lnr
