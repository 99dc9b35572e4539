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

#include "procsel/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "file_util.hpp"
#include "procsel/error.hpp"
#include "registry_json.hpp"

namespace procsel::registry {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// model helpers

std::optional<double> QosSnapshot::attribute(std::string_view name) const {
  if (name == "availability") return availability;
  if (name == "executionTimeMs") return executionTimeMs;
  if (name == "totalCalls") return static_cast<double>(totalCalls);
  auto it = extra.find(std::string(name));
  if (it == extra.end()) return std::nullopt;
  return it->second;
}

const Operation* WebService::find_operation(std::string_view op_name) const {
  for (const auto& op : operations) {
    if (op.name == op_name) return &op;
  }
  return nullptr;
}

const WebService* ServiceRegistry::find_service(std::string_view service_key) const {
  for (const auto& cat : categories) {
    for (const auto& svc : cat.services) {
      if (svc.serviceKey == service_key) return &svc;
    }
  }
  return nullptr;
}

const ServiceCategory* ServiceRegistry::category_of(std::string_view service_key) const {
  for (const auto& cat : categories) {
    for (const auto& svc : cat.services) {
      if (svc.serviceKey == service_key) return &cat;
    }
  }
  return nullptr;
}

std::size_t ServiceRegistry::operation_count() const {
  std::size_t n = 0;
  for (const auto& cat : categories) {
    for (const auto& svc : cat.services) n += svc.operations.size();
  }
  return n;
}

std::string normalize_datatype(std::string_view raw) {
  static const std::map<std::string, std::string, std::less<>> kAliases = {
      {"string", "string"},   {"xsd:string", "string"},   {"str", "string"},
      {"integer", "integer"}, {"xsd:int", "integer"},     {"int", "integer"},
      {"long", "integer"},    {"xsd:long", "integer"},    {"boolean", "boolean"},
      {"xsd:boolean", "boolean"}, {"bool", "boolean"},    {"double", "double"},
      {"xsd:double", "double"}, {"float", "double"},      {"xsd:float", "double"},
      {"decimal", "double"},
  };
  std::string lowered;
  lowered.reserve(raw.size());
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (auto it = kAliases.find(lowered); it != kAliases.end()) return it->second;
  if (auto pos = lowered.rfind(':'); pos != std::string::npos) lowered.erase(0, pos + 1);
  if (auto it = kAliases.find(lowered); it != kAliases.end()) return it->second;
  return lowered;
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_snapshot(const QosSnapshot& snap, const std::string& path) {
  if (!(snap.availability >= 0.0 && snap.availability <= 1.0)) {
    throw Error(ErrorKind::Validation, path + ".availability: " + std::to_string(snap.availability) +
                                           " is outside [0, 1]");
  }
  if (!(snap.executionTimeMs > 0.0) || !std::isfinite(snap.executionTimeMs)) {
    throw Error(ErrorKind::Validation, path + ".executionTimeMs: must be a positive number");
  }
  if (snap.totalCalls < 0) {
    throw Error(ErrorKind::Validation, path + ".totalCalls: must be non-negative");
  }
  for (const auto& [name, value] : snap.extra) {
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::Validation, path + ".extra." + name + ": must be finite");
    }
  }
}

}  // namespace

void validate(const ServiceRegistry& reg) {
  std::set<std::string> keys;
  for (std::size_t c = 0; c < reg.categories.size(); ++c) {
    const auto& cat = reg.categories[c];
    const std::string cpath = "categories[" + std::to_string(c) + "]";
    if (cat.keywords.empty()) {
      throw Error(ErrorKind::Validation,
                  cpath + ".keywords: category '" + cat.name + "' has no usable keywords");
    }
    for (std::size_t s = 0; s < cat.services.size(); ++s) {
      const auto& svc = cat.services[s];
      const std::string spath = cpath + ".services[" + std::to_string(s) + "]";
      if (svc.serviceKey.empty()) {
        throw Error(ErrorKind::Validation, spath + ".serviceKey: must not be empty");
      }
      if (!keys.insert(svc.serviceKey).second) {
        throw Error(ErrorKind::Validation,
                    spath + ".serviceKey: duplicate serviceKey '" + svc.serviceKey + "'");
      }
      if (svc.operations.empty()) {
        throw Error(ErrorKind::Validation,
                    spath + ".operations: service '" + svc.name + "' has no operations");
      }
      std::set<std::string> op_names;
      for (std::size_t o = 0; o < svc.operations.size(); ++o) {
        const auto& op = svc.operations[o];
        const std::string opath = spath + ".operations[" + std::to_string(o) + "]";
        if (op.name.empty()) throw Error(ErrorKind::Validation, opath + ".name: must not be empty");
        if (!op_names.insert(op.name).second) {
          throw Error(ErrorKind::Validation, opath + ".name: duplicate operation '" + op.name +
                                                 "' in service '" + svc.serviceKey + "'");
        }
        for (std::size_t q = 0; q < op.qosHistory.size(); ++q) {
          const std::string qpath = opath + ".qos[" + std::to_string(q) + "]";
          check_snapshot(op.qosHistory[q], qpath);
          if (q > 0 && !(op.qosHistory[q - 1].timestamp < op.qosHistory[q].timestamp)) {
            throw Error(ErrorKind::Validation,
                        qpath + ".timestamp: history must be strictly increasing in time");
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Parse, path + ": " + what);
}

const json* field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string read_string(const json& obj, const char* key, const std::string& path, bool required) {
  const json* v = field(obj, key);
  if (v == nullptr || v->is_null()) {
    if (required) shape_error(path + "." + key, "missing required string");
    return {};
  }
  if (!v->is_string()) shape_error(path + "." + key, "expected a string");
  return v->get<std::string>();
}

double read_number(const json& obj, const char* key, const std::string& path) {
  const json* v = field(obj, key);
  if (v == nullptr) shape_error(path + "." + key, "missing required number");
  if (!v->is_number()) shape_error(path + "." + key, "expected a number");
  return v->get<double>();
}

const json& read_array(const json& obj, const char* key, const std::string& path, bool required) {
  static const json kEmpty = json::array();
  const json* v = field(obj, key);
  if (v == nullptr || v->is_null()) {
    if (required) shape_error(path + "." + key, "missing required array");
    return kEmpty;
  }
  if (!v->is_array()) shape_error(path + "." + key, "expected an array");
  return *v;
}

void require_object(const json& v, const std::string& path) {
  if (!v.is_object()) shape_error(path, "expected an object");
}

std::vector<Parameter> read_parameters(const json& arr, const std::string& path) {
  std::vector<Parameter> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ppath = path + "[" + std::to_string(i) + "]";
    require_object(arr[i], ppath);
    Parameter p;
    p.name = read_string(arr[i], "name", ppath, true);
    p.datatype = normalize_datatype(read_string(arr[i], "datatype", ppath, true));
    out.push_back(std::move(p));
  }
  return out;
}

QosSnapshot read_snapshot(const json& obj, const std::string& path) {
  require_object(obj, path);
  QosSnapshot snap;
  try {
    snap.timestamp = parse_timestamp(read_string(obj, "timestamp", path, true));
  } catch (const Error& e) {
    shape_error(path + ".timestamp", e.what());
  }
  snap.availability = read_number(obj, "availability", path);
  snap.executionTimeMs = read_number(obj, "executionTimeMs", path);
  const json* calls = field(obj, "totalCalls");
  if (calls == nullptr) shape_error(path + ".totalCalls", "missing required integer");
  if (calls->is_number_integer()) {
    snap.totalCalls = calls->get<std::int64_t>();
  } else if (calls->is_number() && std::floor(calls->get<double>()) == calls->get<double>()) {
    snap.totalCalls = static_cast<std::int64_t>(calls->get<double>());
  } else {
    shape_error(path + ".totalCalls", "expected an integer");
  }
  if (const json* extra = field(obj, "extra"); extra != nullptr && !extra->is_null()) {
    require_object(*extra, path + ".extra");
    for (const auto& [name, value] : extra->items()) {
      if (!value.is_number()) shape_error(path + ".extra." + name, "expected a number");
      snap.extra[name] = value.get<double>();
    }
  }
  return snap;
}

Operation read_operation(const json& obj, const std::string& path) {
  require_object(obj, path);
  Operation op;
  op.name = read_string(obj, "name", path, true);
  op.inputs = read_parameters(read_array(obj, "inputs", path, false), path + ".inputs");
  op.outputs = read_parameters(read_array(obj, "outputs", path, false), path + ".outputs");
  const json& qos = read_array(obj, "qos", path, false);
  for (std::size_t i = 0; i < qos.size(); ++i) {
    op.qosHistory.push_back(read_snapshot(qos[i], path + ".qos[" + std::to_string(i) + "]"));
  }
  return op;
}

WebService read_service(const json& obj, const std::string& path) {
  require_object(obj, path);
  WebService svc;
  svc.name = read_string(obj, "name", path, true);
  svc.businessName = read_string(obj, "businessName", path, false);
  svc.businessKey = read_string(obj, "businessKey", path, false);
  svc.serviceKey = read_string(obj, "serviceKey", path, true);
  svc.url = read_string(obj, "url", path, false);
  svc.version = read_string(obj, "version", path, false);
  if (const json* note = field(obj, "securityNote"); note != nullptr && !note->is_null()) {
    if (!note->is_string()) shape_error(path + ".securityNote", "expected a string");
    svc.securityNote = note->get<std::string>();
  }
  const json& ops = read_array(obj, "operations", path, true);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    svc.operations.push_back(read_operation(ops[i], path + ".operations[" + std::to_string(i) + "]"));
  }
  return svc;
}

ordered_json parameters_to_json(const std::vector<Parameter>& params) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : params) {
    arr.push_back(ordered_json{{"name", p.name}, {"datatype", p.datatype}});
  }
  return arr;
}

}  // namespace

ordered_json snapshot_to_json(const QosSnapshot& snap) {
  ordered_json q;
  q["timestamp"] = format_timestamp(snap.timestamp);
  q["availability"] = snap.availability;
  q["executionTimeMs"] = snap.executionTimeMs;
  q["totalCalls"] = snap.totalCalls;
  if (!snap.extra.empty()) {
    ordered_json extra = ordered_json::object();
    for (const auto& [name, value] : snap.extra) extra[name] = value;
    q["extra"] = std::move(extra);
  }
  return q;
}

ordered_json service_to_json(const WebService& svc) {
  ordered_json s;
  s["name"] = svc.name;
  s["businessName"] = svc.businessName;
  s["businessKey"] = svc.businessKey;
  s["serviceKey"] = svc.serviceKey;
  s["url"] = svc.url;
  s["version"] = svc.version;
  if (svc.securityNote) s["securityNote"] = *svc.securityNote;
  ordered_json ops = ordered_json::array();
  for (const auto& op : svc.operations) {
    ordered_json o;
    o["name"] = op.name;
    o["inputs"] = parameters_to_json(op.inputs);
    o["outputs"] = parameters_to_json(op.outputs);
    ordered_json qos = ordered_json::array();
    for (const auto& snap : op.qosHistory) qos.push_back(snapshot_to_json(snap));
    o["qos"] = std::move(qos);
    ops.push_back(std::move(o));
  }
  s["operations"] = std::move(ops);
  return s;
}

ServiceRegistry registry_from_json(std::string_view json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": " + detail::describe_json_error(json_text, e));
  }
  ServiceRegistry reg;
  try {
    require_object(doc, "$");
    const json& cats = read_array(doc, "categories", "$", true);
    for (std::size_t c = 0; c < cats.size(); ++c) {
      const std::string cpath = "categories[" + std::to_string(c) + "]";
      require_object(cats[c], cpath);
      ServiceCategory cat;
      cat.name = read_string(cats[c], "name", cpath, true);
      const json& kws = read_array(cats[c], "keywords", cpath, true);
      for (std::size_t k = 0; k < kws.size(); ++k) {
        if (!kws[k].is_string()) {
          shape_error(cpath + ".keywords[" + std::to_string(k) + "]", "expected a string");
        }
        for (auto& term : lexicon::extract_keywords(kws[k].get<std::string>())) {
          cat.keywords.insert(std::move(term));
        }
      }
      const json& svcs = read_array(cats[c], "services", cpath, false);
      for (std::size_t s = 0; s < svcs.size(); ++s) {
        cat.services.push_back(read_service(svcs[s], cpath + ".services[" + std::to_string(s) + "]"));
      }
      reg.categories.push_back(std::move(cat));
    }
    validate(reg);
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ": " + e.what());
  }
  return reg;
}

ServiceRegistry load_registry(const std::filesystem::path& path) {
  return registry_from_json(detail::read_file(path), path.string());
}

ordered_json registry_to_ordered_json(const ServiceRegistry& reg) {
  ordered_json cats = ordered_json::array();
  for (const auto& cat : reg.categories) {
    ordered_json c;
    c["name"] = cat.name;
    c["keywords"] = ordered_json(std::vector<std::string>(cat.keywords.begin(), cat.keywords.end()));
    ordered_json svcs = ordered_json::array();
    for (const auto& svc : cat.services) svcs.push_back(service_to_json(svc));
    c["services"] = std::move(svcs);
    cats.push_back(std::move(c));
  }
  ordered_json doc;
  doc["categories"] = std::move(cats);
  return doc;
}

std::string registry_to_json(const ServiceRegistry& reg) {
  return registry_to_ordered_json(reg).dump(2) + "\n";
}

void save_registry(const ServiceRegistry& reg, const std::filesystem::path& path) {
  detail::write_file(path, registry_to_json(reg));
}

// ---------------------------------------------------------------------------
// mutation

void append_snapshot(ServiceRegistry& reg, std::string_view service_key,
                     std::string_view operation_name, const QosSnapshot& snap) {
  for (auto& cat : reg.categories) {
    for (auto& svc : cat.services) {
      if (svc.serviceKey != service_key) continue;
      for (auto& op : svc.operations) {
        if (op.name != operation_name) continue;
        const std::string path =
            std::string(service_key) + "/" + std::string(operation_name) + " snapshot";
        check_snapshot(snap, path);
        if (!op.qosHistory.empty() && !(op.qosHistory.back().timestamp < snap.timestamp)) {
          throw Error(ErrorKind::Validation,
                      path + ": timestamp " + format_timestamp(snap.timestamp) +
                          " is not after the last recorded snapshot " +
                          format_timestamp(op.qosHistory.back().timestamp));
        }
        op.qosHistory.push_back(snap);
        return;
      }
      throw Error(ErrorKind::NotFound, "service '" + std::string(service_key) +
                                           "' has no operation '" + std::string(operation_name) + "'");
    }
  }
  throw Error(ErrorKind::NotFound, "unknown serviceKey '" + std::string(service_key) + "'");
}

void add_service(ServiceRegistry& reg, const std::string& category_name,
                 const lexicon::TermSet& keywords, WebService service) {
  if (reg.find_service(service.serviceKey) != nullptr) {
    throw Error(ErrorKind::Validation, "duplicate serviceKey '" + service.serviceKey + "'");
  }
  if (service.operations.empty()) {
    throw Error(ErrorKind::Validation, "service '" + service.name + "' has no operations");
  }
  auto it = std::find_if(reg.categories.begin(), reg.categories.end(),
                         [&](const ServiceCategory& c) { return c.name == category_name; });
  if (it == reg.categories.end()) {
    if (keywords.empty()) {
      throw Error(ErrorKind::Validation,
                  "new category '" + category_name + "' needs at least one keyword");
    }
    reg.categories.push_back(ServiceCategory{category_name, keywords, {}});
    it = std::prev(reg.categories.end());
  } else {
    it->keywords.insert(keywords.begin(), keywords.end());
  }
  it->services.push_back(std::move(service));
}

}  // namespace procsel::registry
