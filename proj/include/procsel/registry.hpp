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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "procsel/lexicon.hpp"
#include "procsel/timestamp.hpp"

namespace procsel::registry {

// Service registry data model: categories own services, services own
// operations, operations own typed parameters and a chronological QoS history.

struct Parameter {
  std::string name;
  std::string datatype;  // always passed through normalize_datatype()

  bool operator==(const Parameter&) const = default;
};

/// One run of the QoS collection script for an operation.
struct QosSnapshot {
  Timestamp timestamp{};
  double availability = 0.0;     // fraction in [0, 1]
  double executionTimeMs = 0.0;  // > 0
  std::int64_t totalCalls = 0;   // >= 0
  std::map<std::string, double> extra;

  /// Built-in attributes by their JSON names, then the extension map.
  std::optional<double> attribute(std::string_view name) const;

  bool operator==(const QosSnapshot&) const = default;
};

struct Operation {
  std::string name;
  std::vector<Parameter> inputs;
  std::vector<Parameter> outputs;
  std::vector<QosSnapshot> qosHistory;  // strictly increasing timestamps, may be empty

  bool operator==(const Operation&) const = default;
};

struct WebService {
  std::string name;
  std::string businessName;
  std::string businessKey;
  std::string serviceKey;
  std::string url;
  std::string version;
  std::vector<Operation> operations;
  std::optional<std::string> securityNote;  // stored, never scored

  const Operation* find_operation(std::string_view op_name) const;

  bool operator==(const WebService&) const = default;
};

struct ServiceCategory {
  std::string name;
  lexicon::TermSet keywords;
  std::vector<WebService> services;

  bool operator==(const ServiceCategory&) const = default;
};

struct ServiceRegistry {
  std::vector<ServiceCategory> categories;

  const WebService* find_service(std::string_view service_key) const;
  /// Category name of the service, or nullptr.
  const ServiceCategory* category_of(std::string_view service_key) const;
  std::size_t operation_count() const;

  bool operator==(const ServiceRegistry&) const = default;
};

/// Maps datatype aliases onto "string", "integer", "boolean", "double".
/// Unknown names are lowercased with any namespace prefix removed.
std::string normalize_datatype(std::string_view raw);

/// Throws Error(Validation) naming the offending element path.
void validate(const ServiceRegistry& reg);

ServiceRegistry registry_from_json(std::string_view json_text, const std::string& origin = "<registry>");
ServiceRegistry load_registry(const std::filesystem::path& path);

std::string registry_to_json(const ServiceRegistry& reg);
void save_registry(const ServiceRegistry& reg, const std::filesystem::path& path);

/// Appends a snapshot keeping the history strictly chronological.
/// Throws Error(NotFound) for an unknown target and Error(Validation) for a
/// timestamp that is not after the last one or out-of-range values.
void append_snapshot(ServiceRegistry& reg, std::string_view service_key,
                     std::string_view operation_name, const QosSnapshot& snap);

/// Adds a service to the named category, creating the category with the given
/// keywords when it does not exist yet. Throws on a duplicate serviceKey.
void add_service(ServiceRegistry& reg, const std::string& category_name,
                 const lexicon::TermSet& keywords, WebService service);

/// Reads operations and typed message parts out of a WSDL 1.1 document.
/// The serviceKey is "ws.<ISO-8601 load time>" and the QoS history is empty.
WebService import_wsdl(std::string_view wsdl_xml, Timestamp load_time,
                       const std::string& origin = "<wsdl>");

}  // namespace procsel::registry
