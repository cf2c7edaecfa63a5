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

#include "lnr/lnr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "lnr/census.hpp"
#include "lnr/io.hpp"
#include "lnr/report.hpp"
#include "lnr/suites.hpp"

struct lnr_structure {
  lnr::NamedStructure value;
};

namespace {

thread_local std::string last_error;

lnr_status status_for(lnr::Errc code) {
  using lnr::Errc;
  switch (code) {
    case Errc::malformed: return LNR_E_MALFORMED;
    case Errc::io: return LNR_E_IO;
    case Errc::unknown_suite: return LNR_E_UNKNOWN_SUITE;
    case Errc::size_cap_exceeded:
    case Errc::order_cap_exceeded: return LNR_E_CAP_EXCEEDED;
    case Errc::precondition_violated:
    case Errc::trivial_module:
    case Errc::not_unital: return LNR_E_PRECONDITION;
    default: return LNR_E_VALIDATION;
  }
}

template <class F>
lnr_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const lnr::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LNR_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LNR_E_INTERNAL;
  }
}

lnr_status invalid(const char* what) {
  last_error = what;
  return LNR_E_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

lnr_options options_or_default(const lnr_options* options) {
  lnr_options o;
  lnr_options_init(&o);
  return options != nullptr ? *options : o;
}

std::string render(const lnr::Json& report, const lnr_options& o) {
  return o.json ? report.dump(2) + "\n" : lnr::render_text(report);
}

lnr_verdict verdict_of(const lnr::Json& report) {
  const std::string status = report.at("status").get<std::string>();
  if (status == lnr::kPass) return LNR_VERDICT_PASS;
  if (status == lnr::kPartial) return LNR_VERDICT_PARTIAL;
  return LNR_VERDICT_FAIL;
}

lnr_status emit(const lnr::Json& report, const lnr_options& o, lnr_verdict* verdict, char** out) {
  if (verdict != nullptr) *verdict = verdict_of(report);
  *out = copy_string(render(report, o));
  return LNR_OK;
}

const lnr::FiniteLoop& additive_of(const lnr::Structure& s) {
  if (auto* g = std::get_if<lnr::FiniteLoop>(&s)) return *g;
  if (auto* n = std::get_if<lnr::LoopNearRing>(&s)) return n->additive();
  throw lnr::Error(lnr::Errc::precondition_violated, "expected a loop or a near-ring");
}

}  // namespace

extern "C" {

void lnr_options_init(lnr_options* options) {
  if (options == nullptr) return;
  options->json = 0;
  options->cap_order = 6;
  options->cap_mg = lnr::kDefaultMapNearRingCap;
  options->threads = 1;
}

const char* lnr_status_string(lnr_status status) {
  switch (status) {
    case LNR_OK: return "ok";
    case LNR_E_INVALID_ARGUMENT: return "invalid argument";
    case LNR_E_IO: return "i/o error";
    case LNR_E_MALFORMED: return "malformed input";
    case LNR_E_VALIDATION: return "validation failed";
    case LNR_E_PRECONDITION: return "precondition violated";
    case LNR_E_CAP_EXCEEDED: return "cap exceeded";
    case LNR_E_UNKNOWN_SUITE: return "unknown suite";
    case LNR_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lnr_last_error(void) { return last_error.c_str(); }

void lnr_string_free(char* s) { std::free(s); }

lnr_status lnr_structure_load(const char* path, lnr_structure** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new lnr_structure{lnr::load_structure(path)};
    return LNR_OK;
  });
}

lnr_status lnr_structure_parse(const char* text, const char* base_dir, lnr_structure** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new lnr_structure{lnr::parse_structure(text, base_dir != nullptr ? base_dir : "")};
    return LNR_OK;
  });
}

void lnr_structure_free(lnr_structure* s) { delete s; }

const char* lnr_structure_kind(const lnr_structure* s) {
  return s == nullptr ? "" : lnr::kind_name(s->value.value).data();
}

size_t lnr_structure_order(const lnr_structure* s) {
  return s == nullptr ? 0 : lnr::structure_order(s->value.value);
}

lnr_status lnr_structure_serialize(const lnr_structure* s, char** out) {
  if (s == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = copy_string(lnr::serialize_structure(s->value));
    return LNR_OK;
  });
}

lnr_status lnr_check_file(const char* path, const lnr_options* options, lnr_verdict* verdict,
                          char** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] {
    try {
      return emit(lnr::check_report(lnr::load_structure(path)), o, verdict, out);
    } catch (const lnr::Error& e) {
      if (status_for(e.code()) != LNR_E_VALIDATION) throw;
      last_error = e.what();
      return emit(lnr::failure_report(std::filesystem::path(path).stem().string(), e), o, verdict, out);
    }
  });
}

lnr_status lnr_analyze(const lnr_structure* s, const lnr_options* options, char** out) {
  if (s == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] { return emit(lnr::analyze_report(s->value), o, nullptr, out); });
}

lnr_status lnr_radicals(const lnr_structure* s, const lnr_options* options, lnr_verdict* verdict,
                        char** out) {
  if (s == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] { return emit(lnr::radicals_report(s->value), o, verdict, out); });
}

lnr_status lnr_localness(const lnr_structure* s, const lnr_options* options, lnr_verdict* verdict,
                         char** out) {
  if (s == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] { return emit(lnr::localness_report(s->value), o, verdict, out); });
}

lnr_status lnr_mtables(const lnr_structure* s, int zero_symmetric, const lnr_options* options,
                       char** out) {
  if (s == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] {
    const lnr::FiniteLoop& g = additive_of(s->value.value);
    const std::string base = s->value.name.empty() ? "G" : s->value.name;
    lnr::NamedStructure m{zero_symmetric ? "M0(" + base + ")" : "M(" + base + ")",
                          zero_symmetric ? lnr::transformation_near_ring_zero(g, o.cap_mg)
                                         : lnr::transformation_near_ring(g, o.cap_mg)};
    *out = copy_string(lnr::serialize_structure(m));
    return LNR_OK;
  });
}

lnr_status lnr_enumerate(const lnr_census_query* query, const lnr_options* options,
                         lnr_line_fn on_line, void* user, size_t* count) {
  if (query == nullptr || on_line == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] {
    lnr::CensusQuery q;
    q.kind = query->near_rings ? lnr::CensusQuery::Kind::near_rings : lnr::CensusQuery::Kind::loops;
    q.order = query->order;
    if (query->additive != nullptr) {
      if (!query->near_rings) {
        throw lnr::Error(lnr::Errc::precondition_violated, "--additive applies to near-rings only");
      }
      q.additive = additive_of(query->additive->value.value);
      q.order = q.additive->order();
    }
    const unsigned f = query->filters;
    q.filters.unital = f & LNR_FILTER_UNITAL;
    q.filters.zero_symmetric = f & LNR_FILTER_ZERO_SYMMETRIC;
    q.filters.non_associative_add = f & LNR_FILTER_NON_ASSOCIATIVE_ADD;
    q.filters.not_left_distributive = f & LNR_FILTER_NOT_LEFT_DISTRIBUTIVE;
    q.filters.local = f & LNR_FILTER_LOCAL;
    q.filters.near_field = f & LNR_FILTER_NEAR_FIELD;
    q.up_to_iso = query->up_to_iso != 0;
    if (query->limit >= 0) q.limit = static_cast<std::size_t>(query->limit);
    q.caps.max_loop_order = o.cap_order;
    q.caps.max_additive_order = o.cap_order;

    std::size_t emitted = 0;
    auto line = [&](const auto& structure, const char* prefix) {
      const lnr::Specimen sp{structure, {}, lnr::analyze_specimen(structure)};
      const std::string name = prefix + std::to_string(q.order) + "." + std::to_string(++emitted);
      return on_line(lnr::specimen_json(sp, name).dump().c_str(), user) != 0;
    };
    if (q.kind == lnr::CensusQuery::Kind::loops) {
      lnr::enumerate_loops(q, [&](const lnr::FiniteLoop& g) { return line(g, "loop"); });
    } else {
      lnr::enumerate_near_rings(q, [&](const lnr::LoopNearRing& n) { return line(n, "nearring"); });
    }
    if (count != nullptr) *count = emitted;
    return LNR_OK;
  });
}

lnr_status lnr_verify(const lnr_structure* s, const char* suite, const lnr_options* options,
                      lnr_verdict* verdict, char** out) {
  if (suite == nullptr || out == nullptr) return invalid("null argument");
  const lnr_options o = options_or_default(options);
  return guarded([&] {
    if (!lnr::is_suite(suite)) {
      throw lnr::Error(lnr::Errc::unknown_suite, std::string("unknown suite '") + suite + "'");
    }
    const lnr::Json report = s != nullptr
                                 ? lnr::verify_structure(s->value, suite)
                                 : lnr::verify_corpus(lnr::build_corpus(), suite, o.threads);
    return emit(report, o, verdict, out);
  });
}

const char* lnr_suite_names(void) {
  static const std::string names = [] {
    std::string out;
    for (auto n : lnr::suite_names()) {
      if (!out.empty()) out += ' ';
      out += n;
    }
    return out;
  }();
  return names.c_str();
}

}  // extern "C"
