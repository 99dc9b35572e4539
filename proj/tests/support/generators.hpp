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

// Seeded random fixtures shared by the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "procsel/bpmn.hpp"
#include "procsel/lexicon.hpp"
#include "procsel/registry.hpp"
#include "procsel/timestamp.hpp"

namespace procsel::testing {

using Rng = std::mt19937_64;

inline const std::vector<std::string>& name_words() {
  static const std::vector<std::string> words = {
      "user", "pass", "email", "address", "content", "reply", "status", "order", "item", "price",
      "amount", "date", "session", "token", "count", "batch", "receiver", "sender", "city", "code"};
  return words;
}

inline const std::vector<std::string>& context_words() {
  static const std::vector<std::string> words = {"payment", "email",   "login",   "order",
                                                 "travel",  "weather", "billing", "shipping"};
  return words;
}

inline const std::vector<std::string>& datatypes() {
  static const std::vector<std::string> types = {"string", "integer", "boolean", "double"};
  return types;
}

/// Disjoint synonym groups. Each group is a clique, so swapping a word for
/// another member of its group never changes which words it matches.
inline const std::vector<std::vector<std::string>>& synsets() {
  static const std::vector<std::vector<std::string>> sets = {
      {"email", "mail", "courriel"}, {"address", "addr"},  {"reply", "response", "answer"},
      {"user", "client"},            {"amount", "sum"},    {"order", "purchase"},
      {"payment", "remittance"},     {"login", "signin"},  {"travel", "trip", "journey"}};
  return sets;
}

inline lexicon::SynonymLexicon synset_lexicon() {
  std::map<std::string, std::vector<std::string>> raw;
  for (const auto& group : synsets()) {
    for (const auto& w : group) {
      for (const auto& other : group) {
        if (other != w) raw[w].push_back(other);
      }
    }
  }
  return lexicon::SynonymLexicon::from_entries(raw);
}

/// Another member of the word's synonym group, or the word itself.
inline std::string synonym_of(const std::string& word, Rng& rng) {
  for (const auto& group : synsets()) {
    if (std::find(group.begin(), group.end(), word) == group.end()) continue;
    std::vector<std::string> others;
    for (const auto& w : group) {
      if (w != word) others.push_back(w);
    }
    return others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
  }
  return word;
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::string capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

/// camelCase identifier of one or two vocabulary words.
inline std::string random_identifier(Rng& rng) {
  std::string id = pick(name_words(), rng);
  if (uniform(rng, 0, 2) == 0) id += capitalize(pick(name_words(), rng));
  return id;
}

/// n parameters with pairwise distinct names.
inline std::vector<registry::Parameter> random_params(Rng& rng, int n) {
  std::vector<registry::Parameter> out;
  std::set<std::string> used;
  while (static_cast<int>(out.size()) < n) {
    std::string name = random_identifier(rng);
    if (!used.insert(name).second) continue;
    out.push_back({name, pick(datatypes(), rng)});
  }
  return out;
}

inline Timestamp month_start(int months_after_2014) {
  using namespace std::chrono;
  const year_month ym = year{2014} / January + months{months_after_2014};
  return sys_days{ym / 1};
}

inline std::vector<registry::QosSnapshot> random_history(Rng& rng, int length) {
  std::vector<registry::QosSnapshot> h;
  const int start = uniform(rng, 0, 6);
  for (int i = 0; i < length; ++i) {
    registry::QosSnapshot s;
    s.timestamp = month_start(start + i);
    s.availability = uniform_real(rng, 0.8, 1.0);
    s.executionTimeMs = uniform_real(rng, 20.0, 800.0);
    s.totalCalls = uniform(rng, 0, 5000);
    h.push_back(s);
  }
  return h;
}

struct RegistryShape {
  int categories = 3;
  int servicesPerCategory = 4;
  int minOperations = 1;
  int maxOperations = 3;
  int maxParams = 3;
  int minHistory = 0;
  int maxHistory = 4;
};

inline registry::ServiceRegistry random_registry(Rng& rng, const RegistryShape& shape) {
  registry::ServiceRegistry reg;
  for (int c = 0; c < shape.categories; ++c) {
    registry::ServiceCategory cat;
    cat.name = "category" + std::to_string(c);
    cat.keywords.insert(context_words()[static_cast<std::size_t>(c) % context_words().size()]);
    if (uniform(rng, 0, 1) == 0) cat.keywords.insert(pick(context_words(), rng));
    for (int s = 0; s < shape.servicesPerCategory; ++s) {
      registry::WebService svc;
      svc.name = "service" + std::to_string(c) + "_" + std::to_string(s);
      svc.businessName = "Example";
      svc.businessKey = "uddi:example:business";
      svc.serviceKey = "ws." + std::to_string(c) + "." + std::to_string(s);
      svc.url = "http://example.org/" + svc.name;
      svc.version = "1.0";
      const int n_ops = uniform(rng, shape.minOperations, shape.maxOperations);
      std::set<std::string> op_names;
      while (static_cast<int>(svc.operations.size()) < n_ops) {
        registry::Operation op;
        op.name = "op" + capitalize(random_identifier(rng));
        if (!op_names.insert(op.name).second) continue;
        op.inputs = random_params(rng, uniform(rng, 0, shape.maxParams));
        op.outputs = random_params(rng, uniform(rng, 1, shape.maxParams));
        op.qosHistory = random_history(rng, uniform(rng, shape.minHistory, shape.maxHistory));
        svc.operations.push_back(std::move(op));
      }
      cat.services.push_back(std::move(svc));
    }
    reg.categories.push_back(std::move(cat));
  }
  return reg;
}

inline std::string format_params(const std::vector<registry::Parameter>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i ? ", " : "") + params[i].name + "=" + params[i].datatype;
  }
  return out;
}

inline std::string annotation_text(const std::vector<registry::Parameter>& inputs,
                                   const std::vector<registry::Parameter>& outputs,
                                   const std::vector<std::string>& context) {
  std::string text;
  if (!inputs.empty()) text += "input: " + format_params(inputs) + "\n";
  text += "output: " + format_params(outputs) + "\ncontext: ";
  for (std::size_t i = 0; i < context.size(); ++i) text += (i ? ", " : "") + context[i];
  return text;
}

/// A requirement loosely derived from a random registry operation, so a fair
/// share of operations pass the functional gate.
struct RandomTask {
  std::vector<registry::Parameter> inputs;
  std::vector<registry::Parameter> outputs;
  std::vector<std::string> context;
};

inline RandomTask random_task(Rng& rng, const registry::ServiceRegistry& reg) {
  RandomTask t;
  const auto& cat = pick(reg.categories, rng);
  const auto& svc = pick(cat.services, rng);
  const auto& op = pick(svc.operations, rng);
  t.inputs = op.inputs;
  t.outputs = op.outputs;
  std::shuffle(t.inputs.begin(), t.inputs.end(), rng);
  std::shuffle(t.outputs.begin(), t.outputs.end(), rng);
  if (!t.inputs.empty() && uniform(rng, 0, 2) == 0) t.inputs.pop_back();
  if (t.outputs.size() > 1 && uniform(rng, 0, 2) == 0) t.outputs.pop_back();
  if (uniform(rng, 0, 2) == 0) {
    auto extra = random_params(rng, 1).front();
    if (std::none_of(t.inputs.begin(), t.inputs.end(), [&](const auto& p) { return p.name == extra.name; })) {
      t.inputs.push_back(extra);
    }
  }
  if (uniform(rng, 0, 4) == 0) t.outputs = random_params(rng, uniform(rng, 1, 2));
  t.context.push_back(uniform(rng, 0, 5) == 0 ? pick(context_words(), rng) : *cat.keywords.begin());
  return t;
}

inline bpmn::BusinessProcess make_process(const std::string& id, const std::vector<RandomTask>& tasks) {
  bpmn::BusinessProcess p;
  p.id = id;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    p.tasks.push_back({"servicetask" + n, "Task " + n});
    p.annotations.push_back(
        {"textannotation" + n, annotation_text(tasks[i].inputs, tasks[i].outputs, tasks[i].context)});
    p.associations.push_back({"association" + n, "servicetask" + n, "textannotation" + n});
  }
  return p;
}

inline bpmn::BusinessProcess random_process(Rng& rng, const registry::ServiceRegistry& reg, int n_tasks) {
  std::vector<RandomTask> tasks;
  for (int i = 0; i < n_tasks; ++i) tasks.push_back(random_task(rng, reg));
  return make_process("process" + std::to_string(uniform(rng, 0, 9999)), tasks);
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// BPMN 2.0 XML for a process built by make_process, with a start/end event
/// and sequence flows chaining the tasks.
inline std::string to_bpmn_xml(const bpmn::BusinessProcess& p) {
  std::string x = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  x += "<definitions xmlns=\"http://www.omg.org/spec/BPMN/20100524/MODEL\" id=\"defs\" "
       "targetNamespace=\"http://example.org/generated\">\n";
  x += "  <process id=\"" + xml_escape(p.id) + "\">\n";
  x += "    <startEvent id=\"start\"/>\n";
  for (const auto& t : p.tasks) {
    x += "    <serviceTask id=\"" + xml_escape(t.id) + "\" name=\"" + xml_escape(t.displayName) + "\"/>\n";
  }
  x += "    <endEvent id=\"end\"/>\n";
  std::string prev = "start";
  for (std::size_t i = 0; i <= p.tasks.size(); ++i) {
    const std::string next = i < p.tasks.size() ? p.tasks[i].id : "end";
    x += "    <sequenceFlow id=\"flow" + std::to_string(i + 1) + "\" sourceRef=\"" + prev +
         "\" targetRef=\"" + next + "\"/>\n";
    prev = next;
  }
  for (const auto& a : p.annotations) {
    x += "    <textAnnotation id=\"" + xml_escape(a.id) + "\"><text>" + xml_escape(a.rawText) +
         "</text></textAnnotation>\n";
  }
  for (const auto& a : p.associations) {
    x += "    <association id=\"" + xml_escape(a.id) + "\" sourceRef=\"" + xml_escape(a.sourceId) +
         "\" targetRef=\"" + xml_escape(a.targetId) + "\"/>\n";
  }
  x += "  </process>\n</definitions>\n";
  return x;
}

}  // namespace procsel::testing
