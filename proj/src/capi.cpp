/*
 * Copyright 2026 The procsel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "procsel/procsel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "file_util.hpp"
#include "procsel/bpmn.hpp"
#include "procsel/config.hpp"
#include "procsel/error.hpp"
#include "procsel/lexicon.hpp"
#include "procsel/ranking.hpp"
#include "procsel/registry.hpp"
#include "procsel/serve.hpp"

struct procsel_registry {
  procsel::registry::ServiceRegistry value;
};

struct procsel_lexicon {
  procsel::lexicon::SynonymLexicon value;
};

struct procsel_config {
  procsel::AppConfig value;
  std::string lexicon_path;
  std::string registry_path;
};

struct procsel_server {
  procsel::serve::SelectionServer value;
};

namespace {

thread_local std::string g_last_error;

procsel_status status_of(procsel::ErrorKind kind) {
  switch (kind) {
    case procsel::ErrorKind::Parse: return PROCSEL_ERR_PARSE;
    case procsel::ErrorKind::Validation: return PROCSEL_ERR_VALIDATION;
    case procsel::ErrorKind::NotFound: return PROCSEL_ERR_NOT_FOUND;
    case procsel::ErrorKind::Io: return PROCSEL_ERR_IO;
    case procsel::ErrorKind::Config: return PROCSEL_ERR_CONFIG;
  }
  return PROCSEL_ERR_INTERNAL;
}

procsel_status fail(procsel_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

/// Runs body, translating exceptions into status codes.
template <typename Fn>
procsel_status guarded(Fn&& body) {
  try {
    body();
    return PROCSEL_OK;
  } catch (const procsel::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PROCSEL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PROCSEL_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define PROCSEL_REQUIRE(cond, what) \
  if (!(cond)) return fail(PROCSEL_ERR_ARGUMENT, what)

void sync_paths(procsel_config& cfg) {
  cfg.lexicon_path = cfg.value.lexiconPath.string();
  cfg.registry_path = cfg.value.registryPath.string();
}

}  // namespace

extern "C" {

const char* procsel_version(void) { return "1.0.0"; }

const char* procsel_last_error(void) { return g_last_error.c_str(); }

const char* procsel_status_name(procsel_status status) {
  switch (status) {
    case PROCSEL_OK: return "ok";
    case PROCSEL_ERR_PARSE: return "parse error";
    case PROCSEL_ERR_VALIDATION: return "validation error";
    case PROCSEL_ERR_NOT_FOUND: return "not found";
    case PROCSEL_ERR_IO: return "i/o error";
    case PROCSEL_ERR_CONFIG: return "configuration error";
    case PROCSEL_ERR_ARGUMENT: return "invalid argument";
    case PROCSEL_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void procsel_string_free(char* s) { std::free(s); }

// --- registry --------------------------------------------------------------

procsel_status procsel_registry_new(procsel_registry** out) {
  PROCSEL_REQUIRE(out, "out must not be null");
  return guarded([&] { *out = new procsel_registry{}; });
}

procsel_status procsel_registry_load(const char* path, procsel_registry** out) {
  PROCSEL_REQUIRE(path && out, "path and out must not be null");
  return guarded([&] { *out = new procsel_registry{procsel::registry::load_registry(path)}; });
}

procsel_status procsel_registry_from_json(const char* json, procsel_registry** out) {
  PROCSEL_REQUIRE(json && out, "json and out must not be null");
  return guarded([&] { *out = new procsel_registry{procsel::registry::registry_from_json(json)}; });
}

procsel_status procsel_registry_save(const procsel_registry* reg, const char* path) {
  PROCSEL_REQUIRE(reg && path, "registry and path must not be null");
  return guarded([&] { procsel::registry::save_registry(reg->value, path); });
}

procsel_status procsel_registry_to_json(const procsel_registry* reg, char** out_json) {
  PROCSEL_REQUIRE(reg && out_json, "registry and out_json must not be null");
  return guarded([&] { *out_json = dup_string(procsel::registry::registry_to_json(reg->value)); });
}

procsel_status procsel_registry_append_snapshot(procsel_registry* reg, const char* service_key,
                                                const char* operation, const char* timestamp,
                                                double availability, double execution_time_ms,
                                                long long total_calls) {
  PROCSEL_REQUIRE(reg && service_key && operation, "registry, service_key and operation must not be null");
  return guarded([&] {
    procsel::registry::QosSnapshot snap;
    snap.timestamp = timestamp ? procsel::parse_timestamp(timestamp) : procsel::now_utc();
    snap.availability = availability;
    snap.executionTimeMs = execution_time_ms;
    snap.totalCalls = total_calls;
    procsel::registry::append_snapshot(reg->value, service_key, operation, snap);
  });
}

procsel_status procsel_registry_import_wsdl(procsel_registry* reg, const char* wsdl_path,
                                            const char* category, const char* keywords,
                                            char** out_service_key) {
  PROCSEL_REQUIRE(reg && wsdl_path && category, "registry, wsdl_path and category must not be null");
  return guarded([&] {
    auto service = procsel::registry::import_wsdl(procsel::detail::read_file(wsdl_path),
                                                  procsel::now_utc(), wsdl_path);
    procsel::lexicon::TermSet terms;
    std::stringstream list(keywords ? keywords : category);
    for (std::string item; std::getline(list, item, ',');) {
      for (auto& t : procsel::lexicon::extract_keywords(item)) terms.insert(std::move(t));
    }
    const std::string key = service.serviceKey;
    procsel::registry::add_service(reg->value, category, terms, std::move(service));
    if (out_service_key) *out_service_key = dup_string(key);
  });
}

void procsel_registry_free(procsel_registry* reg) { delete reg; }

// --- lexicon ---------------------------------------------------------------

procsel_status procsel_lexicon_new(procsel_lexicon** out) {
  PROCSEL_REQUIRE(out, "out must not be null");
  return guarded([&] { *out = new procsel_lexicon{}; });
}

procsel_status procsel_lexicon_load(const char* path, procsel_lexicon** out) {
  PROCSEL_REQUIRE(path && out, "path and out must not be null");
  return guarded([&] { *out = new procsel_lexicon{procsel::lexicon::SynonymLexicon::load(path)}; });
}

void procsel_lexicon_free(procsel_lexicon* lex) { delete lex; }

// --- config ----------------------------------------------------------------

procsel_status procsel_config_load(const char* path, procsel_config** out) {
  PROCSEL_REQUIRE(out, "out must not be null");
  return guarded([&] {
    auto* cfg = new procsel_config{};
    if (path != nullptr) {
      try {
        cfg->value = procsel::load_config(path);
      } catch (...) {
        delete cfg;
        throw;
      }
    }
    sync_paths(*cfg);
    *out = cfg;
  });
}

procsel_status procsel_config_apply_json(procsel_config* cfg, const char* overrides_json) {
  PROCSEL_REQUIRE(cfg && overrides_json, "config and overrides_json must not be null");
  return guarded([&] {
    cfg->value.selection = procsel::apply_overrides(cfg->value.selection, overrides_json);
  });
}

const char* procsel_config_lexicon_path(const procsel_config* cfg) {
  return cfg ? cfg->lexicon_path.c_str() : "";
}

const char* procsel_config_registry_path(const procsel_config* cfg) {
  return cfg ? cfg->registry_path.c_str() : "";
}

procsel_status procsel_config_to_json(const procsel_config* cfg, char** out_json) {
  PROCSEL_REQUIRE(cfg && out_json, "config and out_json must not be null");
  return guarded([&] { *out_json = dup_string(procsel::config_to_json(cfg->value.selection)); });
}

void procsel_config_free(procsel_config* cfg) { delete cfg; }

// --- selection -------------------------------------------------------------

procsel_status procsel_select(const procsel_registry* reg, const procsel_lexicon* lex,
                              const procsel_config* cfg, const char* bpmn_xml, procsel_format format,
                              char** out_report) {
  PROCSEL_REQUIRE(reg && bpmn_xml && out_report, "registry, bpmn_xml and out_report must not be null");
  return guarded([&] {
    static const procsel::lexicon::SynonymLexicon kNoSynonyms;
    const procsel::SelectionConfig selection = cfg ? cfg->value.selection : procsel::SelectionConfig{};
    const auto process = procsel::bpmn::parse_bpmn(bpmn_xml);
    const auto report = procsel::ranking::select_for_process(process, reg->value,
                                                             lex ? lex->value : kNoSynonyms, selection);
    *out_report = dup_string(format == PROCSEL_FORMAT_TEXT ? procsel::ranking::render_text(report)
                                                           : procsel::ranking::report_to_json(report));
  });
}

procsel_status procsel_validate_bpmn(const char* bpmn_xml, char** out_summary) {
  PROCSEL_REQUIRE(bpmn_xml, "bpmn_xml must not be null");
  return guarded([&] {
    const auto process = procsel::bpmn::parse_bpmn(bpmn_xml);
    const auto requirements = procsel::bpmn::bind_requirements(process);
    std::ostringstream out;
    out << "process " << process.id << ": " << process.tasks.size() << " service task(s), "
        << process.annotations.size() << " annotation(s), " << process.associations.size()
        << " association(s), " << process.flows.size() << " flow(s)\n";
    for (const auto& r : requirements) {
      out << "  " << r.taskId << " (" << r.taskName << "): " << r.inputs.size() << " input(s), "
          << r.outputs.size() << " output(s), context {";
      bool first = true;
      for (const auto& k : r.contextKeywords) {
        out << (first ? "" : ", ") << k;
        first = false;
      }
      out << "}\n";
    }
    if (out_summary) *out_summary = dup_string(out.str());
  });
}

procsel_status procsel_explain(const char* report_json, const char* task_id, int rank, char** out_text) {
  PROCSEL_REQUIRE(report_json && task_id && out_text, "report_json, task_id and out_text must not be null");
  return guarded([&] {
    const auto report = procsel::ranking::report_from_json(report_json);
    *out_text = dup_string(procsel::ranking::explain(report, task_id, rank));
  });
}

// --- server ----------------------------------------------------------------

procsel_status procsel_server_new(const procsel_registry* reg, const procsel_lexicon* lex,
                                  const procsel_config* cfg, procsel_server** out) {
  PROCSEL_REQUIRE(reg && out, "registry and out must not be null");
  return guarded([&] {
    *out = new procsel_server{procsel::serve::SelectionServer(
        reg->value, lex ? lex->value : procsel::lexicon::SynonymLexicon{},
        cfg ? cfg->value.selection : procsel::SelectionConfig{})};
  });
}

procsel_status procsel_server_bind(procsel_server* srv, const char* host, int port, int* out_port) {
  PROCSEL_REQUIRE(srv, "server must not be null");
  const int bound = srv->value.bind(host ? host : "0.0.0.0", port);
  if (bound < 0) return fail(PROCSEL_ERR_IO, "cannot bind to port " + std::to_string(port));
  if (out_port) *out_port = bound;
  return PROCSEL_OK;
}

procsel_status procsel_server_run(procsel_server* srv) {
  PROCSEL_REQUIRE(srv, "server must not be null");
  if (!srv->value.run()) return fail(PROCSEL_ERR_IO, "server stopped with an error");
  return PROCSEL_OK;
}

void procsel_server_stop(procsel_server* srv) {
  if (srv) srv->value.stop();
}

void procsel_server_free(procsel_server* srv) { delete srv; }

}  // extern "C"
