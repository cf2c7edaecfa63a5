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

// Basic vocabulary shared by every module: element indices, dense tables,
// subsets of a carrier, and the error type with its witness payload.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lnr {

/// Index of an element in a finite carrier {0, ..., n-1}. Element 0 is
/// always the additive zero.
using Element = std::uint32_t;

/// A total map between carriers, stored as its value vector.
using ElementMap = std::vector<Element>;

enum class Errc {
  not_latin_square,
  no_two_sided_zero,
  empty_set,
  not_a_subloop,
  not_normal,
  not_a_homomorphism,
  not_associative,
  not_right_distributive,
  no_identity,
  not_unital,
  size_cap_exceeded,
  action_law_violated,
  not_a_submodule,
  not_an_ideal,
  precondition_violated,
  trivial_module,
  order_cap_exceeded,
  malformed,
  unknown_suite,
  io,
};

std::string_view to_string(Errc code);

/// A concrete counterexample: the name of the violated law and the element
/// indices that violate it, so the failure can be re-derived by hand.
struct Witness {
  std::string law;
  std::vector<Element> elements;

  std::string describe() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::optional<Witness> witness = {});

  Errc code() const noexcept { return code_; }
  // The message without the error name and witness.
  const std::string& message() const noexcept { return message_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string message_;
  std::optional<Witness> witness_;
};

/// Dense row-major table of element indices.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Element fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Throws Errc::malformed if the rows are ragged.
  static Table from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Element> data() const noexcept { return data_; }
  std::vector<std::vector<Element>> to_rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// A subset of the carrier {0, ..., n-1}, stored as a bitmask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t carrier_order)
      : order_(carrier_order), words_((carrier_order + 63) / 64, 0) {}
  ElementSet(std::size_t carrier_order, std::initializer_list<Element> members);
  ElementSet(std::size_t carrier_order, std::span<const Element> members);

  static ElementSet full(std::size_t carrier_order);
  static ElementSet singleton(std::size_t carrier_order, Element e) {
    return ElementSet(carrier_order, {e});
  }

  std::size_t carrier_order() const noexcept { return order_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == order_; }

  bool contains(Element e) const noexcept {
    return e < order_ && ((words_[e / 64] >> (e % 64)) & 1u) != 0;
  }
  void insert(Element e);
  void erase(Element e);

  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;
  ElementSet complement() const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  std::vector<Element> members() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Orders by size, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Intersection of a family; the empty family yields the full carrier.
ElementSet intersect_all(std::size_t carrier_order, std::span<const ElementSet> family);

/// Image of `s` under a map.
ElementSet image_of(std::size_t codomain_order, std::span<const Element> map, const ElementSet& s);
/// Preimage of `s` under a map.
ElementSet preimage_of(std::span<const Element> map, const ElementSet& s);

}  // namespace lnr
