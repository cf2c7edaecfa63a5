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

// Verification suites. Each suite checks one family of statements about
// loops, modules and near-rings exhaustively on a structure and collects
// witnesses for every violation.

#include <string_view>
#include <vector>

#include "lnr/io.hpp"

namespace lnr {

struct CorpusOptions {
  std::size_t max_loop_order = 5;
  /// Near-rings are enumerated over every loop of order 2..max_additive_order.
  std::size_t max_additive_order = 6;
  std::size_t map_cap = kDefaultMapNearRingCap;
  /// Quotient modules N/K are added for near-rings up to this order.
  std::size_t max_quotient_order = 8;
};

/// Loops, unital zero-symmetric near-rings up to isomorphism, M0(G), and a
/// fixed set of modules and bimodules, in a deterministic order.
std::vector<NamedStructure> build_corpus(const CorpusOptions& options = {});

/// Registered suite names, "all" last.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

/// Throws Errc::unknown_suite.
Json verify_structure(const NamedStructure& s, std::string_view suite);
Json verify_corpus(const std::vector<NamedStructure>& corpus, std::string_view suite,
                   unsigned threads = 1);

}  // namespace lnr
