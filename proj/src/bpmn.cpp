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

#include "procsel/bpmn.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "procsel/error.hpp"
#include "xml.hpp"

namespace procsel::bpmn {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t offset, const std::string& what) {
  throw Error(ErrorKind::Parse, "annotation syntax error at offset " + std::to_string(offset) + ": " + what);
}

}  // namespace

BusinessProcess parse_bpmn(std::string_view xml_text, const std::string& origin) {
  auto root = xml::parse(xml_text, origin);
  if (root->ns != kModelNamespace) {
    throw Error(ErrorKind::Parse, origin + ": root element <" + root->name +
                                      "> is not in the BPMN 2.0 MODEL namespace");
  }

  BusinessProcess process;
  std::map<std::string, int> ids;  // id -> line of first declaration
  std::string duplicate;
  int duplicate_line = 0;

  root->visit([&](const xml::Element& el) {
    if (el.ns != kModelNamespace) return;
    const std::string id = el.attribute_or("id");
    if (!id.empty()) {
      auto [it, inserted] = ids.emplace(id, el.line);
      if (!inserted && duplicate.empty()) {
        duplicate = id;
        duplicate_line = el.line;
      }
    }
    if (el.name == "process") {
      if (process.id.empty()) process.id = id;
    } else if (el.name == "serviceTask") {
      process.tasks.push_back(ServiceTaskNode{id, el.attribute_or("name")});
    } else if (el.name == "textAnnotation") {
      std::string text;
      for (const auto* t : el.children_named("text")) text += t->text;
      process.annotations.push_back(TextAnnotationNode{id, std::move(text)});
    } else if (el.name == "association") {
      process.associations.push_back(
          AssociationEdge{id, el.attribute_or("sourceRef"), el.attribute_or("targetRef")});
    } else if (el.name == "sequenceFlow") {
      process.flows.push_back(
          SequenceFlow{id, el.attribute_or("sourceRef"), el.attribute_or("targetRef")});
    }
  });

  if (!duplicate.empty()) {
    throw Error(ErrorKind::Validation, origin + ": line " + std::to_string(duplicate_line) +
                                           ": duplicate element id '" + duplicate + "'");
  }
  for (const auto& task : process.tasks) {
    if (task.id.empty()) throw Error(ErrorKind::Validation, origin + ": serviceTask without id");
  }
  for (const auto& ann : process.annotations) {
    if (ann.id.empty()) throw Error(ErrorKind::Validation, origin + ": textAnnotation without id");
  }
  for (const auto& assoc : process.associations) {
    for (const auto* end : {&assoc.sourceId, &assoc.targetId}) {
      if (!ids.count(*end)) {
        throw Error(ErrorKind::Validation, origin + ": association '" + assoc.id +
                                               "' references unknown id '" + *end + "'");
      }
    }
  }
  return process;
}

AnnotationContent parse_annotation(std::string_view raw) {
  AnnotationContent out;
  bool saw_output = false;
  bool saw_context = false;

  std::size_t line_start = 0;
  while (line_start <= raw.size()) {
    std::size_t line_end = raw.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = raw.size();
    const std::string_view line = raw.substr(line_start, line_end - line_start);

    if (!trim(line).empty()) {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        syntax_error(line_start, "expected '<key>: <items>'");
      }
      const std::string key = lower(trim(line.substr(0, colon)));
      enum class Clause { Input, Output, Context } clause;
      if (key == "input" || key == "inputs") {
        clause = Clause::Input;
      } else if (key == "output" || key == "outputs") {
        clause = Clause::Output;
      } else if (key == "context") {
        clause = Clause::Context;
      } else {
        syntax_error(line_start, "unknown key '" + std::string(trim(line.substr(0, colon))) +
                                     "' (expected input, output or context)");
      }

      std::size_t item_start = colon + 1;
      while (item_start <= line.size()) {
        std::size_t item_end = line.find(',', item_start);
        if (item_end == std::string_view::npos) item_end = line.size();
        const std::string_view item = trim(line.substr(item_start, item_end - item_start));
        const std::size_t offset = line_start + item_start;
        if (item.empty()) {
          // "input:" alone is allowed; "a=b,,c=d" is not.
          if (item_end != line.size() || item_start != colon + 1) {
            syntax_error(offset, "empty item");
          }
        } else if (clause == Clause::Context) {
          for (auto& term : lexicon::extract_keywords(item)) {
            out.context.insert(std::move(term));
            saw_context = true;
          }
        } else {
          const std::size_t eq = item.find('=');
          if (eq == std::string_view::npos) {
            syntax_error(offset, "parameter '" + std::string(item) + "' must be written name=datatype");
          }
          const std::string_view name = trim(item.substr(0, eq));
          const std::string_view type = trim(item.substr(eq + 1));
          if (name.empty() || type.empty()) {
            syntax_error(offset, "parameter '" + std::string(item) + "' has an empty name or datatype");
          }
          registry::Parameter p{std::string(name), registry::normalize_datatype(type)};
          if (clause == Clause::Input) {
            out.inputs.push_back(std::move(p));
          } else {
            out.outputs.push_back(std::move(p));
            saw_output = true;
          }
        }
        item_start = item_end + 1;
      }
    }
    line_start = line_end + 1;
  }

  if (!saw_output) throw Error(ErrorKind::Validation, "annotation has no 'output:' parameters");
  if (!saw_context) throw Error(ErrorKind::Validation, "annotation has no 'context:' keywords");
  return out;
}

std::vector<TaskRequirement> bind_requirements(const BusinessProcess& process) {
  std::map<std::string, const TextAnnotationNode*> annotations;
  for (const auto& ann : process.annotations) annotations.emplace(ann.id, &ann);

  std::vector<TaskRequirement> out;
  std::vector<std::string> unbound;
  for (const auto& task : process.tasks) {
    std::vector<const TextAnnotationNode*> bound;
    for (const auto& assoc : process.associations) {
      const std::string* other = nullptr;
      if (assoc.sourceId == task.id) other = &assoc.targetId;
      if (assoc.targetId == task.id) other = &assoc.sourceId;
      if (other == nullptr) continue;
      auto it = annotations.find(*other);
      if (it != annotations.end() &&
          std::find(bound.begin(), bound.end(), it->second) == bound.end()) {
        bound.push_back(it->second);
      }
    }
    if (bound.empty()) {
      unbound.push_back(task.id);
      continue;
    }
    if (bound.size() > 1) {
      throw Error(ErrorKind::Validation, "service task '" + task.id + "' is associated with " +
                                             std::to_string(bound.size()) +
                                             " text annotations ('" + bound[0]->id + "', '" +
                                             bound[1]->id + "'); expected exactly one");
    }
    AnnotationContent content;
    try {
      content = parse_annotation(bound.front()->rawText);
    } catch (const Error& e) {
      throw Error(e.kind(), "text annotation '" + bound.front()->id + "' of service task '" +
                                task.id + "': " + e.what());
    }
    out.push_back(TaskRequirement{task.id, task.displayName, std::move(content.inputs),
                                  std::move(content.outputs), std::move(content.context)});
  }
  if (!unbound.empty()) {
    std::string list;
    for (const auto& id : unbound) list += (list.empty() ? "'" : ", '") + id + "'";
    throw Error(ErrorKind::Validation, "service task(s) without an associated text annotation: " + list);
  }
  return out;
}

}  // namespace procsel::bpmn
