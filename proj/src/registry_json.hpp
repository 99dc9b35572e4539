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

#include "json.hpp"
#include "procsel/registry.hpp"

namespace procsel::registry {

nlohmann::ordered_json snapshot_to_json(const QosSnapshot& snap);
nlohmann::ordered_json service_to_json(const WebService& svc);
nlohmann::ordered_json registry_to_ordered_json(const ServiceRegistry& reg);

}  // namespace procsel::registry
