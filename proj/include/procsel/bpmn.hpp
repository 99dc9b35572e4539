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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "procsel/lexicon.hpp"
#include "procsel/registry.hpp"

namespace procsel::bpmn {

inline constexpr std::string_view kModelNamespace = "http://www.omg.org/spec/BPMN/20100524/MODEL";

struct ServiceTaskNode {
  std::string id;
  std::string displayName;
};

struct TextAnnotationNode {
  std::string id;
  std::string rawText;
};

struct AssociationEdge {
  std::string id;
  std::string sourceId;
  std::string targetId;
};

struct SequenceFlow {
  std::string id;
  std::string sourceId;
  std::string targetId;
};

/// The subset of a BPMN 2.0 model used for selection. Flows are kept for
/// completeness but never interpreted.
struct BusinessProcess {
  std::string id;
  std::vector<ServiceTaskNode> tasks;
  std::vector<TextAnnotationNode> annotations;
  std::vector<AssociationEdge> associations;
  std::vector<SequenceFlow> flows;
};

/// Requirements declared for one service task through its text annotation.
struct TaskRequirement {
  std::string taskId;
  std::string taskName;
  std::vector<registry::Parameter> inputs;
  std::vector<registry::Parameter> outputs;
  lexicon::TermSet contextKeywords;
};

/// Parsed annotation body.
struct AnnotationContent {
  std::vector<registry::Parameter> inputs;
  std::vector<registry::Parameter> outputs;
  lexicon::TermSet context;
};

/// Reads serviceTask, textAnnotation, association and sequenceFlow elements
/// in document order. Everything else (gateways, other task kinds, BPMNDI)
/// is skipped. Throws Error(Parse) for malformed XML or a non-BPMN root and
/// Error(Validation) for duplicate ids or associations with unknown endpoints.
BusinessProcess parse_bpmn(std::string_view xml, const std::string& origin = "<bpmn>");

/// Annotation grammar, one clause per line:
///
///     input:   name=datatype, name=datatype
///     output:  name=datatype
///     context: keyword, keyword
///
/// Keys are case-insensitive and may repeat (items are appended). Blank
/// lines are ignored. "input:" is optional; "output:" and "context:" must
/// each contribute at least one item. Syntax errors report the character
/// offset into the raw text.
AnnotationContent parse_annotation(std::string_view raw);

/// One requirement per service task, in document order. An association may
/// point either way between task and annotation. Throws Error(Validation)
/// listing every unbound task, or naming a task bound to several annotations.
std::vector<TaskRequirement> bind_requirements(const BusinessProcess& process);

}  // namespace procsel::bpmn
