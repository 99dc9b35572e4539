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

#include <filesystem>
#include <string>
#include <string_view>

#include "procsel/functional.hpp"
#include "procsel/qos.hpp"

namespace procsel {

/// Everything that influences the scores of a selection run.
struct SelectionConfig {
  qos::QosConfig qos = qos::QosConfig::defaults();
  double functionalWeight = 0.5;  // weight of the normalised functional score in the global score
  functional::ScoreTable scoreTable;

  /// Throws Error(Config) on the first violated invariant.
  void validate() const;

  bool operator==(const SelectionConfig&) const = default;
};

struct AppConfig {
  SelectionConfig selection;
  std::filesystem::path lexiconPath;   // empty: no synonyms
  std::filesystem::path registryPath;  // empty: must be given on the command line
};

/// Parses the JSON configuration format. Absent fields keep their defaults;
/// attributes listed without weights share the weight equally. Relative paths
/// are resolved against base_dir.
AppConfig config_from_json(std::string_view json_text, const std::filesystem::path& base_dir = {},
                           const std::string& origin = "<config>");
AppConfig load_config(const std::filesystem::path& path);

/// Applies a partial JSON object (same schema as the file) on top of base.
SelectionConfig apply_overrides(const SelectionConfig& base, std::string_view overrides_json);

/// Canonical JSON echo of a selection configuration, as embedded in reports.
std::string config_to_json(const SelectionConfig& config);

}  // namespace procsel
