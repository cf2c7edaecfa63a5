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

// Reports are JSON objects {"subject", "status", "results"}. Keys are
// sorted on output, and no timings or addresses are included, so equal
// inputs give byte-identical reports.

#include <string>

#include "lnr/census.hpp"
#include "lnr/io.hpp"
#include "lnr/radical.hpp"

namespace lnr {

inline constexpr const char* kPass = "pass";
inline constexpr const char* kFail = "fail";
inline constexpr const char* kPartial = "partial";

Json subject_json(const NamedStructure& s);
Json make_report(Json subject, const std::string& status, Json results);

/// Report for a structure that failed validation, carrying the witness.
Json failure_report(const std::string& name, const Error& e);

Json check_report(const NamedStructure& s);
Json analyze_report(const NamedStructure& s);
/// Status is "partial" when the structure is not a unital, zero-symmetric
/// near-ring with at least two elements.
Json radicals_report(const NamedStructure& s);
Json localness_report(const NamedStructure& s);

Json radicals_json(const RadicalReport& r);
Json localness_json(const LocalnessReport& l);
Json analysis_json(const SpecimenAnalysis& a);
/// One catalog line: the structure plus an "analysis" object.
Json specimen_json(const Specimen& s, const std::string& name);

/// Indented key: value rendering of a report.
std::string render_text(const Json& report);

}  // namespace lnr
