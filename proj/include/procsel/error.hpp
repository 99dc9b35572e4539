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

#include <stdexcept>
#include <string>

namespace procsel {

enum class ErrorKind {
  Parse,       // malformed input document
  Validation,  // well-formed input that violates a domain invariant
  NotFound,    // unknown service, operation, task or rank
  Io,          // file could not be read or written
  Config,      // invalid configuration value
};

const char* to_string(ErrorKind kind) noexcept;

/// Domain error raised by every procsel module. The message always names the
/// offending file, element or JSON path so it can be shown to users verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace procsel
