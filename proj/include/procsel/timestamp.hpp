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

#include <chrono>
#include <string>
#include <string_view>

namespace procsel {

using Timestamp = std::chrono::sys_seconds;

/// Parses "YYYY-MM-DD", "YYYY-MM-DDThh:mm:ss" or "YYYY-MM-DDThh:mm:ssZ".
/// A trailing "+hh:mm"/"-hh:mm" offset is converted to UTC. Throws
/// Error(Parse) on anything else.
Timestamp parse_timestamp(std::string_view text);

/// Always emits "YYYY-MM-DDThh:mm:ssZ".
std::string format_timestamp(Timestamp ts);

Timestamp now_utc();

}  // namespace procsel
