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

// JSON structure files.
//
//   {"kind": "loop" | "near_ring" | "left_module" | "bimodule",
//    "name": "...", "order": n, "add": [[...]], "mul": [[...]],
//    "labels": ["..."]}
//
// A left module carries "near_ring" (an inline object or a path relative to
// the file) and "action", an |N| x |G| table. A bimodule carries any of
// "left_near_ring"/"left_action" and "right_near_ring"/"right_action"; the
// right action is |G| x |M|.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "lnr/loop.hpp"
#include "lnr/module.hpp"
#include "lnr/near_ring.hpp"

namespace lnr {

using Json = nlohmann::json;

using Structure = std::variant<FiniteLoop, LoopNearRing, LeftModule, Bimodule>;

struct NamedStructure {
  std::string name;
  Structure value;
};

std::string_view kind_name(const Structure& s);
std::size_t structure_order(const Structure& s);

/// Throws Errc::malformed (with line/column or field path), Errc::io, or a
/// validation code from the structure constructors.
NamedStructure parse_structure(std::string_view text,
                               const std::filesystem::path& base_dir = {});
NamedStructure load_structure(const std::filesystem::path& path);

Json structure_to_json(const NamedStructure& s);
/// Pretty-printed with sorted keys and a trailing newline.
std::string serialize_structure(const NamedStructure& s);

/// FNV-1a 64 over the compact serialization with the name removed, as 16
/// hex digits.
std::string content_hash(const NamedStructure& s);
std::uint64_t fnv1a64(std::string_view bytes);

Json to_json(const ElementSet& s);
Json to_json(const std::vector<ElementSet>& family);
Json to_json(const Witness& w);

}  // namespace lnr
