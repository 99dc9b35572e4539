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

#include <memory>
#include <string>
#include <string_view>

#include "procsel/config.hpp"
#include "procsel/lexicon.hpp"
#include "procsel/registry.hpp"

namespace procsel::serve {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// JSON-over-HTTP front end. The registry, lexicon and base configuration are
/// fixed at construction; handlers are const and may run concurrently.
///
///   POST /select            {"bpmn": "<xml>", "config": {...partial overrides}}
///   GET  /services          [{"serviceKey", "name", "category", "operationCount"}]
///   GET  /services/{key}    full service record, QoS histories included
///
/// Domain failures answer 400 with {"error": <kind>, "message": <text>}.
class SelectionServer {
 public:
  SelectionServer(registry::ServiceRegistry registry, lexicon::SynonymLexicon lexicon,
                  SelectionConfig config);
  ~SelectionServer();

  SelectionServer(const SelectionServer&) = delete;
  SelectionServer& operator=(const SelectionServer&) = delete;

  Response handle_select(std::string_view request_body) const;
  Response handle_list() const;
  Response handle_service(std::string_view service_key) const;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port, or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a successful bind().
  bool run();
  void stop();

 private:
  struct Http;
  registry::ServiceRegistry registry_;
  lexicon::SynonymLexicon lexicon_;
  SelectionConfig config_;
  std::unique_ptr<Http> http_;
};

}  // namespace procsel::serve
