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

#include "procsel/config.hpp"

#include "config_json.hpp"
#include "file_util.hpp"
#include "procsel/error.hpp"

namespace procsel {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Config, path + ": " + what);
}

double number_at(const json& obj, const char* key, const std::string& path, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_number()) bad(path + "." + key, "expected a number");
  return it->get<double>();
}

int int_at(const json& obj, const char* key, const std::string& path, int fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) bad(path + "." + key, "expected an integer");
  return it->get<int>();
}

qos::Direction default_direction(const std::string& name, const std::string& path) {
  if (name == "availability" || name == "totalCalls") return qos::Direction::Maximize;
  if (name == "executionTimeMs") return qos::Direction::Minimize;
  bad(path + ".direction", "required for attribute '" + name + "'");
}

void read_qos(const json& obj, qos::QosConfig& cfg) {
  if (!obj.is_object()) bad("qos", "expected an object");
  if (auto it = obj.find("attributes"); it != obj.end() && !it->is_null()) {
    if (!it->is_array() || it->empty()) bad("qos.attributes", "expected a non-empty array");
    std::vector<qos::AttributeSpec> specs;
    std::size_t weighted = 0;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& a = (*it)[i];
      const std::string path = "qos.attributes[" + std::to_string(i) + "]";
      if (!a.is_object()) bad(path, "expected an object");
      qos::AttributeSpec spec;
      auto name = a.find("name");
      if (name == a.end() || !name->is_string()) bad(path + ".name", "expected a string");
      spec.name = name->get<std::string>();
      if (auto dir = a.find("direction"); dir != a.end() && !dir->is_null()) {
        const std::string d = dir->is_string() ? dir->get<std::string>() : "";
        if (d == "maximize") {
          spec.direction = qos::Direction::Maximize;
        } else if (d == "minimize") {
          spec.direction = qos::Direction::Minimize;
        } else {
          bad(path + ".direction", "expected \"maximize\" or \"minimize\"");
        }
      } else {
        spec.direction = default_direction(spec.name, path);
      }
      if (a.contains("weight") && !a["weight"].is_null()) {
        spec.weight = number_at(a, "weight", path, 0.0);
        ++weighted;
      }
      specs.push_back(std::move(spec));
    }
    if (weighted == 0) {
      for (auto& s : specs) s.weight = 1.0 / static_cast<double>(specs.size());
    } else if (weighted != specs.size()) {
      bad("qos.attributes", "either every attribute has a weight or none has");
    }
    cfg.attributes = std::move(specs);
  }
  cfg.nGaps = int_at(obj, "n_gaps", "qos", cfg.nGaps);
  cfg.stabilityWeight = number_at(obj, "stability_weight", "qos", cfg.stabilityWeight);
  cfg.epsilon = number_at(obj, "epsilon", "qos", cfg.epsilon);
}

void read_score_table(const json& obj, functional::ScoreTable& t) {
  if (!obj.is_object()) bad("score_table", "expected an object");
  t.nbEqual = int_at(obj, "nbEqual", "score_table", t.nbEqual);
  t.nbFavorable = int_at(obj, "nbFavorable", "score_table", t.nbFavorable);
  t.nbUnfavorable = int_at(obj, "nbUnfavorable", "score_table", t.nbUnfavorable);
  t.stringSame = int_at(obj, "stringSame", "score_table", t.stringSame);
  t.stringDifferent = int_at(obj, "stringDifferent", "score_table", t.stringDifferent);
}

void read_selection(const json& doc, SelectionConfig& cfg) {
  if (auto it = doc.find("qos"); it != doc.end() && !it->is_null()) read_qos(*it, cfg.qos);
  if (auto it = doc.find("score_table"); it != doc.end() && !it->is_null()) {
    read_score_table(*it, cfg.scoreTable);
  }
  cfg.functionalWeight = number_at(doc, "functional_weight", "$", cfg.functionalWeight);
}

}  // namespace

void SelectionConfig::validate() const {
  qos.validate();
  if (!(functionalWeight >= 0.0 && functionalWeight <= 1.0)) {
    throw Error(ErrorKind::Config, "functional_weight must be in [0, 1]");
  }
  if (!scoreTable.valid()) {
    throw Error(ErrorKind::Config,
                "score_table: requires nbEqual > nbFavorable > nbUnfavorable and "
                "stringSame > stringDifferent >= 0");
  }
}

AppConfig config_from_json(std::string_view json_text, const std::filesystem::path& base_dir,
                           const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": " + detail::describe_json_error(json_text, e));
  }
  AppConfig cfg;
  try {
    if (!doc.is_object()) bad("$", "configuration must be a JSON object");
    read_selection(doc, cfg.selection);
    auto path_at = [&](const char* key) -> std::filesystem::path {
      auto it = doc.find(key);
      if (it == doc.end() || it->is_null()) return {};
      if (!it->is_string()) bad(key, "expected a path string");
      std::filesystem::path p = it->get<std::string>();
      return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    };
    cfg.lexiconPath = path_at("lexicon");
    cfg.registryPath = path_at("registry");
    cfg.selection.validate();
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ": " + e.what());
  }
  return cfg;
}

AppConfig load_config(const std::filesystem::path& path) {
  return config_from_json(detail::read_file(path), path.parent_path(), path.string());
}

ordered_json config_to_ordered_json(const SelectionConfig& config) {
  ordered_json attrs = ordered_json::array();
  for (const auto& a : config.qos.attributes) {
    attrs.push_back(ordered_json{
        {"name", a.name},
        {"direction", a.direction == qos::Direction::Maximize ? "maximize" : "minimize"},
        {"weight", a.weight}});
  }
  ordered_json q;
  q["attributes"] = std::move(attrs);
  q["n_gaps"] = config.qos.nGaps;
  q["stability_weight"] = config.qos.stabilityWeight;
  q["epsilon"] = config.qos.epsilon;

  ordered_json t;
  t["nbEqual"] = config.scoreTable.nbEqual;
  t["nbFavorable"] = config.scoreTable.nbFavorable;
  t["nbUnfavorable"] = config.scoreTable.nbUnfavorable;
  t["stringSame"] = config.scoreTable.stringSame;
  t["stringDifferent"] = config.scoreTable.stringDifferent;

  ordered_json out;
  out["qos"] = std::move(q);
  out["functional_weight"] = config.functionalWeight;
  out["score_table"] = std::move(t);
  return out;
}

std::string config_to_json(const SelectionConfig& config) {
  return config_to_ordered_json(config).dump(2);
}

SelectionConfig apply_overrides(const SelectionConfig& base, std::string_view overrides_json) {
  json patch;
  try {
    patch = json::parse(overrides_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "config overrides: " + detail::describe_json_error(overrides_json, e));
  }
  if (patch.is_null()) return base;
  if (!patch.is_object()) throw Error(ErrorKind::Config, "config overrides: expected a JSON object");
  SelectionConfig cfg = base;
  try {
    read_selection(patch, cfg);
    cfg.validate();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("config overrides: ") + e.what());
  }
  return cfg;
}

}  // namespace procsel
