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

// procsel command-line tool. Talks to the engine only through the C API.
//
// Exit status: 0 success, 1 domain error (diagnostic on stderr), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "procsel/procsel.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Thrown for domain failures; carries the text printed on stderr.
struct DomainFailure {
  std::string message;
};

void check(procsel_status status, const std::string& context) {
  if (status != PROCSEL_OK) {
    throw DomainFailure{context + ": " + procsel_status_name(status) + ": " + procsel_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { procsel_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct RegistryDeleter {
  void operator()(procsel_registry* r) const { procsel_registry_free(r); }
};
struct LexiconDeleter {
  void operator()(procsel_lexicon* l) const { procsel_lexicon_free(l); }
};
struct ConfigDeleter {
  void operator()(procsel_config* c) const { procsel_config_free(c); }
};
struct ServerDeleter {
  void operator()(procsel_server* s) const { procsel_server_free(s); }
};
using Registry = std::unique_ptr<procsel_registry, RegistryDeleter>;
using Lexicon = std::unique_ptr<procsel_lexicon, LexiconDeleter>;
using Config = std::unique_ptr<procsel_config, ConfigDeleter>;
using Server = std::unique_ptr<procsel_server, ServerDeleter>;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure{"cannot open '" + path + "' for reading"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainFailure{"cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw DomainFailure{"failed writing '" + path + "'"};
}

Config load_config(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("PROCSEL_CONFIG"); env != nullptr && *env != '\0') path = env;
  }
  procsel_config* raw = nullptr;
  check(procsel_config_load(path.empty() ? nullptr : path.c_str(), &raw),
        path.empty() ? std::string("default configuration") : path);
  return Config(raw);
}

Registry load_registry(const std::string& path) {
  procsel_registry* raw = nullptr;
  check(procsel_registry_load(path.c_str(), &raw), "registry");
  return Registry(raw);
}

Lexicon load_lexicon(const std::string& path) {
  procsel_lexicon* raw = nullptr;
  if (path.empty()) {
    check(procsel_lexicon_new(&raw), "lexicon");
  } else {
    check(procsel_lexicon_load(path.c_str(), &raw), "lexicon");
  }
  return Lexicon(raw);
}

/// Flag value, else the path named in the configuration, else empty.
std::string pick(const std::string& flag, const char* from_config) {
  return flag.empty() ? std::string(from_config) : flag;
}

struct UsageFailure {
  std::string message;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"procsel: QoS-aware service selection for BPMN business processes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(procsel_version()));

  // select
  std::string bpmn_path, registry_path, config_path, lexicon_path, out_path, format = "json";
  auto* select = app.add_subcommand("select", "Rank candidate operations for every service task");
  select->add_option("--bpmn", bpmn_path, "BPMN 2.0 process file")->required();
  select->add_option("--registry", registry_path, "Service registry JSON file");
  select->add_option("--config", config_path, "Configuration JSON file (default: $PROCSEL_CONFIG)");
  select->add_option("--lexicon", lexicon_path, "Synonym lexicon JSON file");
  select->add_option("--out", out_path, "Write the report here instead of stdout");
  select->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  // validate
  std::string validate_bpmn;
  auto* validate = app.add_subcommand("validate", "Parse a process and bind its service tasks");
  validate->add_option("--bpmn", validate_bpmn, "BPMN 2.0 process file")->required();

  // registry import-wsdl / snapshot
  auto* registry_cmd = app.add_subcommand("registry", "Maintain a service registry file");
  registry_cmd->require_subcommand(1);

  std::string wsdl_path, into_path, category = "imported", keywords;
  auto* import_cmd = registry_cmd->add_subcommand("import-wsdl", "Add the service described by a WSDL 1.1 file");
  import_cmd->add_option("wsdl", wsdl_path, "WSDL file")->required();
  import_cmd->add_option("--into", into_path, "Registry file to update (created if missing)")->required();
  import_cmd->add_option("--category", category, "Category receiving the service");
  import_cmd->add_option("--keywords", keywords, "Comma-separated keywords for a new category");

  std::string snap_registry, snap_service, snap_op, snap_timestamp, snap_config;
  double availability = 0.0, exec_ms = 0.0;
  long long calls = 0;
  auto* snapshot_cmd = registry_cmd->add_subcommand("snapshot", "Record a QoS measurement for an operation");
  snapshot_cmd->add_option("--registry", snap_registry, "Registry file to update (default: from config)");
  snapshot_cmd->add_option("--config", snap_config, "Configuration JSON file (default: $PROCSEL_CONFIG)");
  snapshot_cmd->add_option("--service", snap_service, "serviceKey")->required();
  snapshot_cmd->add_option("--op", snap_op, "Operation name")->required();
  snapshot_cmd->add_option("--availability", availability, "Availability in [0, 1]")->required();
  snapshot_cmd->add_option("--exec-ms", exec_ms, "Execution time in milliseconds")->required();
  snapshot_cmd->add_option("--calls", calls, "Total number of calls")->required();
  snapshot_cmd->add_option("--timestamp", snap_timestamp, "ISO-8601 time (default: now, UTC)");

  // explain
  std::string report_path, task_id;
  int rank = 0;
  auto* explain = app.add_subcommand("explain", "Show how a ranked candidate was scored");
  explain->add_option("--report", report_path, "JSON report written by 'select'")->required();
  explain->add_option("--task", task_id, "Task id")->required();
  explain->add_option("--rank", rank, "Rank (1 = best)")->required();

  // serve
  std::string serve_registry, serve_config, serve_lexicon, host = "0.0.0.0";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve selection over HTTP");
  serve->add_option("--registry", serve_registry, "Service registry JSON file");
  serve->add_option("--config", serve_config, "Configuration JSON file (default: $PROCSEL_CONFIG)");
  serve->add_option("--lexicon", serve_lexicon, "Synonym lexicon JSON file");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Listen port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*select) {
      Config cfg = load_config(config_path);
      const std::string reg_path = pick(registry_path, procsel_config_registry_path(cfg.get()));
      if (reg_path.empty()) throw UsageFailure{"select: --registry is required (or set \"registry\" in the config)"};
      Registry reg = load_registry(reg_path);
      Lexicon lex = load_lexicon(pick(lexicon_path, procsel_config_lexicon_path(cfg.get())));
      const std::string xml = read_text(bpmn_path);
      char* raw = nullptr;
      check(procsel_select(reg.get(), lex.get(), cfg.get(), xml.c_str(),
                           format == "text" ? PROCSEL_FORMAT_TEXT : PROCSEL_FORMAT_JSON, &raw),
            bpmn_path);
      OwnedString report(raw);
      if (out_path.empty()) {
        std::fwrite(report.get(), 1, std::char_traits<char>::length(report.get()), stdout);
      } else {
        write_text(out_path, report.get());
      }
      return 0;
    }

    if (*validate) {
      const std::string xml = read_text(validate_bpmn);
      char* raw = nullptr;
      check(procsel_validate_bpmn(xml.c_str(), &raw), validate_bpmn);
      OwnedString summary(raw);
      std::cout << summary.get();
      return 0;
    }

    if (*import_cmd) {
      procsel_registry* raw = nullptr;
      if (std::filesystem::exists(into_path)) {
        check(procsel_registry_load(into_path.c_str(), &raw), "registry");
      } else {
        check(procsel_registry_new(&raw), "registry");
      }
      Registry reg(raw);
      char* key = nullptr;
      check(procsel_registry_import_wsdl(reg.get(), wsdl_path.c_str(), category.c_str(),
                                         keywords.empty() ? nullptr : keywords.c_str(), &key),
            wsdl_path);
      OwnedString owned_key(key);
      check(procsel_registry_save(reg.get(), into_path.c_str()), into_path);
      std::cout << owned_key.get() << "\n";
      return 0;
    }

    if (*snapshot_cmd) {
      std::string path = snap_registry;
      if (path.empty()) {
        Config cfg = load_config(snap_config);
        path = procsel_config_registry_path(cfg.get());
      }
      if (path.empty()) {
        throw UsageFailure{"registry snapshot: --registry is required (or set \"registry\" in the config)"};
      }
      Registry reg = load_registry(path);
      check(procsel_registry_append_snapshot(reg.get(), snap_service.c_str(), snap_op.c_str(),
                                             snap_timestamp.empty() ? nullptr : snap_timestamp.c_str(),
                                             availability, exec_ms, calls),
            "snapshot");
      check(procsel_registry_save(reg.get(), path.c_str()), path);
      return 0;
    }

    if (*explain) {
      const std::string report = read_text(report_path);
      char* raw = nullptr;
      check(procsel_explain(report.c_str(), task_id.c_str(), rank, &raw), report_path);
      OwnedString text(raw);
      std::cout << text.get();
      return 0;
    }

    if (*serve) {
      Config cfg = load_config(serve_config);
      const std::string reg_path = pick(serve_registry, procsel_config_registry_path(cfg.get()));
      if (reg_path.empty()) throw UsageFailure{"serve: --registry is required (or set \"registry\" in the config)"};
      Registry reg = load_registry(reg_path);
      Lexicon lex = load_lexicon(pick(serve_lexicon, procsel_config_lexicon_path(cfg.get())));
      procsel_server* raw = nullptr;
      check(procsel_server_new(reg.get(), lex.get(), cfg.get(), &raw), "serve");
      Server server(raw);
      int bound = 0;
      check(procsel_server_bind(server.get(), host.c_str(), port, &bound), "serve");
      std::cerr << "procsel: listening on " << host << ":" << bound << "\n";
      check(procsel_server_run(server.get()), "serve");
      return 0;
    }
  } catch (const UsageFailure& e) {
    std::cerr << "procsel: " << e.message << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    std::cerr << "procsel: " << e.message << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
