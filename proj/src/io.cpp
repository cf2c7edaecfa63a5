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

#include "lnr/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace lnr {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(Errc::malformed, "field '" + field + "': " + what);
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

Table read_table(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) field_error(field, "expected a non-empty array of rows");
  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array()) field_error(row_field, "expected an array of integers");
    if (!rows.empty() && row.size() != rows[0].size()) {
      field_error(row_field, "expected " + std::to_string(rows[0].size()) + " entries, got " +
                                 std::to_string(row.size()));
    }
    std::vector<Element> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Json& v = row[c];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::int64_t>() > std::numeric_limits<Element>::max()) {
        field_error(row_field + "[" + std::to_string(c) + "]", "expected a non-negative integer");
      }
      values.push_back(v.get<Element>());
    }
    rows.push_back(std::move(values));
  }
  return Table::from_rows(rows);
}

// Entries must index an element of a carrier with `bound` elements.
void check_range(const Table& t, std::size_t bound, const std::string& field) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (t(r, c) >= bound) {
        field_error(field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                    std::to_string(t(r, c)) + " is not an element of a carrier of order " +
                        std::to_string(bound));
      }
    }
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(join(prefix, key), "missing");
  return *it;
}

std::vector<std::string> read_labels(const Json& obj, const std::string& prefix) {
  std::vector<std::string> labels;
  auto it = obj.find("labels");
  if (it == obj.end()) return labels;
  if (!it->is_array()) field_error(join(prefix, "labels"), "expected an array of strings");
  for (const auto& l : *it) {
    if (!l.is_string()) field_error(join(prefix, "labels"), "expected an array of strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

FiniteLoop read_carrier(const Json& obj, const std::string& prefix) {
  Table add = read_table(require(obj, "add", prefix), join(prefix, "add"));
  check_range(add, add.rows(), join(prefix, "add"));
  if (auto it = obj.find("order"); it != obj.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() != static_cast<std::int64_t>(add.rows())) {
      field_error(join(prefix, "order"), "does not match the add table (" +
                                             std::to_string(add.rows()) + " rows)");
    }
  }
  return FiniteLoop::from_table(std::move(add), read_labels(obj, prefix));
}

NamedStructure parse_object(const Json& obj, const std::filesystem::path& base_dir,
                            const std::string& prefix);

LoopNearRing read_near_ring_ref(const Json& ref, const std::filesystem::path& base_dir,
                                const std::string& field) {
  if (!ref.is_string() && !ref.is_object()) field_error(field, "expected an object or a path");
  NamedStructure s = ref.is_string() ? load_structure(base_dir / ref.get<std::string>())
                                     : parse_object(ref, base_dir, field);
  if (auto* n = std::get_if<LoopNearRing>(&s.value)) return std::move(*n);
  field_error(field, "does not describe a near_ring");
}

NamedStructure parse_object(const Json& obj, const std::filesystem::path& base_dir,
                            const std::string& prefix) {
  if (!obj.is_object()) field_error(prefix.empty() ? "<root>" : prefix, "expected an object");
  const Json& kind_json = require(obj, "kind", prefix);
  if (!kind_json.is_string()) field_error(join(prefix, "kind"), "expected a string");
  const std::string kind = kind_json.get<std::string>();
  std::string name;
  if (auto it = obj.find("name"); it != obj.end()) {
    if (!it->is_string()) field_error(join(prefix, "name"), "expected a string");
    name = it->get<std::string>();
  }

  if (kind == "loop") return {name, read_carrier(obj, prefix)};
  if (kind == "near_ring") {
    FiniteLoop add = read_carrier(obj, prefix);
    Table mul = read_table(require(obj, "mul", prefix), join(prefix, "mul"));
    check_range(mul, add.order(), join(prefix, "mul"));
    return {name, LoopNearRing::from_parts(std::move(add), std::move(mul))};
  }
  if (kind == "left_module") {
    FiniteLoop carrier = read_carrier(obj, prefix);
    LoopNearRing ring =
        read_near_ring_ref(require(obj, "near_ring", prefix), base_dir, join(prefix, "near_ring"));
    Table action = read_table(require(obj, "action", prefix), join(prefix, "action"));
    check_range(action, carrier.order(), join(prefix, "action"));
    return {name, LeftModule::create(std::move(ring), std::move(carrier), std::move(action))};
  }
  if (kind == "bimodule") {
    FiniteLoop carrier = read_carrier(obj, prefix);
    std::optional<LeftModule> left;
    std::optional<RightModule> right;
    for (const char* side : {"left", "right"}) {
      const std::string ring_key = std::string(side) + "_near_ring";
      const std::string action_key = std::string(side) + "_action";
      const bool has_ring = obj.contains(ring_key);
      if (has_ring != obj.contains(action_key)) {
        field_error(join(prefix, has_ring ? action_key : ring_key), "missing");
      }
      if (!has_ring) continue;
      LoopNearRing ring = read_near_ring_ref(obj[ring_key], base_dir, join(prefix, ring_key));
      Table action = read_table(obj[action_key], join(prefix, action_key));
      check_range(action, carrier.order(), join(prefix, action_key));
      if (side[0] == 'l') {
        left = LeftModule::create(std::move(ring), carrier, std::move(action));
      } else {
        right = RightModule::create(std::move(ring), carrier, std::move(action));
      }
    }
    if (!left && !right) field_error(prefix.empty() ? "<root>" : prefix, "bimodule has no action");
    return {name, Bimodule::create(std::move(left), std::move(right))};
  }
  field_error(join(prefix, "kind"), "unknown kind '" + kind + "'");
}

Json table_json(const Table& t) { return t.to_rows(); }

Json carrier_json(std::string_view kind, const std::string& name, const FiniteLoop& g) {
  Json j;
  j["kind"] = kind;
  j["name"] = name;
  j["order"] = g.order();
  j["add"] = table_json(g.table());
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json near_ring_json(const std::string& name, const LoopNearRing& n) {
  Json j = carrier_json("near_ring", name, n.additive());
  j["mul"] = table_json(n.mul_table());
  return j;
}

}  // namespace

std::string_view kind_name(const Structure& s) {
  switch (s.index()) {
    case 0: return "loop";
    case 1: return "near_ring";
    case 2: return "left_module";
    default: return "bimodule";
  }
}

std::size_t structure_order(const Structure& s) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Bimodule>) {
          return x.carrier().order();
        } else {
          return x.order();
        }
      },
      s);
}

NamedStructure parse_structure(std::string_view text, const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::malformed, "invalid JSON at line " + std::to_string(line) + ", column " +
                                     std::to_string(column));
  }
  return parse_object(j, base_dir, "");
}

NamedStructure load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure(buf.str(), path.parent_path());
  } catch (const Error& e) {
    if (e.code() != Errc::malformed) throw;
    throw Error(Errc::malformed, path.filename().string() + ": " + e.message(), e.witness());
  }
}

Json structure_to_json(const NamedStructure& s) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteLoop>) {
          return carrier_json("loop", s.name, x);
        } else if constexpr (std::is_same_v<T, LoopNearRing>) {
          return near_ring_json(s.name, x);
        } else if constexpr (std::is_same_v<T, LeftModule>) {
          Json j = carrier_json("left_module", s.name, x.carrier());
          j["near_ring"] = near_ring_json("", x.ring());
          j["action"] = table_json(x.action());
          return j;
        } else {
          Json j = carrier_json("bimodule", s.name, x.carrier());
          if (x.left()) {
            j["left_near_ring"] = near_ring_json("", x.left()->ring());
            j["left_action"] = table_json(x.left()->action());
          }
          if (x.right()) {
            j["right_near_ring"] = near_ring_json("", x.right()->ring());
            j["right_action"] = table_json(x.right()->action());
          }
          return j;
        }
      },
      s.value);
}

std::string serialize_structure(const NamedStructure& s) {
  return structure_to_json(s).dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_hash(const NamedStructure& s) {
  Json j = structure_to_json(s);
  j.erase("name");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

Json to_json(const ElementSet& s) { return s.members(); }

Json to_json(const std::vector<ElementSet>& family) {
  Json out = Json::array();
  for (const auto& s : family) out.push_back(to_json(s));
  return out;
}

Json to_json(const Witness& w) { return Json{{"law", w.law}, {"elements", w.elements}}; }

}  // namespace lnr
