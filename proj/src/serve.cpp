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

#include "procsel/serve.hpp"

#include "httplib.h"
#include "json.hpp"
#include "procsel/bpmn.hpp"
#include "procsel/error.hpp"
#include "procsel/ranking.hpp"
#include "registry_json.hpp"

namespace procsel::serve {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Response error_response(int status, std::string_view kind, std::string_view message) {
  ordered_json body;
  body["error"] = kind;
  body["message"] = message;
  return Response{status, body.dump() + "\n"};
}

}  // namespace

struct SelectionServer::Http {
  httplib::Server server;
};

SelectionServer::SelectionServer(registry::ServiceRegistry registry, lexicon::SynonymLexicon lexicon,
                                 SelectionConfig config)
    : registry_(std::move(registry)),
      lexicon_(std::move(lexicon)),
      config_(std::move(config)),
      http_(std::make_unique<Http>()) {
  config_.validate();

  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  http_->server.Post("/select", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_select(req.body));
  });
  http_->server.Get("/services", [this, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_list());
  });
  http_->server.Get(R"(/services/([^/]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_service(req.matches[1].str()));
  });
}

SelectionServer::~SelectionServer() { stop(); }

Response SelectionServer::handle_select(std::string_view request_body) const {
  try {
    json request;
    try {
      request = json::parse(request_body);
    } catch (const json::parse_error& e) {
      return error_response(400, "parse error", std::string("request body is not JSON: ") + e.what());
    }
    if (!request.is_object()) return error_response(400, "parse error", "request body must be a JSON object");
    auto bpmn_it = request.find("bpmn");
    if (bpmn_it == request.end() || !bpmn_it->is_string() || bpmn_it->get<std::string>().empty()) {
      return error_response(400, "validation error", "field 'bpmn' must be a non-empty XML string");
    }
    SelectionConfig cfg = config_;
    if (auto cfg_it = request.find("config"); cfg_it != request.end() && !cfg_it->is_null()) {
      cfg = apply_overrides(config_, cfg_it->dump());
    }
    const auto process = bpmn::parse_bpmn(bpmn_it->get<std::string>(), "request.bpmn");
    const auto report = ranking::select_for_process(process, registry_, lexicon_, cfg);
    return Response{200, ranking::report_to_json(report)};
  } catch (const Error& e) {
    return error_response(400, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal error", e.what());
  }
}

Response SelectionServer::handle_list() const {
  ordered_json list = ordered_json::array();
  for (const auto& cat : registry_.categories) {
    for (const auto& svc : cat.services) {
      ordered_json item;
      item["serviceKey"] = svc.serviceKey;
      item["name"] = svc.name;
      item["category"] = cat.name;
      item["operationCount"] = svc.operations.size();
      list.push_back(std::move(item));
    }
  }
  return Response{200, list.dump(2) + "\n"};
}

Response SelectionServer::handle_service(std::string_view service_key) const {
  const auto* svc = registry_.find_service(service_key);
  if (svc == nullptr) {
    return error_response(404, "not found", "unknown serviceKey '" + std::string(service_key) + "'");
  }
  ordered_json record = registry::service_to_json(*svc);
  record["category"] = registry_.category_of(service_key)->name;
  return Response{200, record.dump(2) + "\n"};
}

int SelectionServer::bind(const std::string& host, int port) {
  if (port == 0) return http_->server.bind_to_any_port(host);
  return http_->server.bind_to_port(host, port) ? port : -1;
}

bool SelectionServer::run() { return http_->server.listen_after_bind(); }

void SelectionServer::stop() {
  if (http_) http_->server.stop();
}

}  // namespace procsel::serve
