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

// WSDL 1.1 ingestion. Only the abstract part of the description is read
// (types, messages, portTypes) plus the service name and endpoint address.
// Both rpc-style parts (part/@type) and document/literal parts
// (part/@element) are supported; a document/literal element whose type is a
// sequence of child elements is unwrapped into one parameter per child.

#include <map>
#include <set>

#include "procsel/error.hpp"
#include "procsel/registry.hpp"
#include "xml.hpp"

namespace procsel::registry {

namespace {

struct SchemaIndex {
  std::map<std::string, const xml::Element*, std::less<>> elements;
  std::map<std::string, const xml::Element*, std::less<>> complex_types;
};

SchemaIndex index_schema(const xml::Element& definitions) {
  SchemaIndex idx;
  const xml::Element* types = definitions.child("types");
  if (types == nullptr) return idx;
  for (const auto* schema : types->children_named("schema")) {
    for (const auto& node : schema->children) {
      const std::string name = node->attribute_or("name");
      if (name.empty()) continue;
      if (node->name == "element") idx.elements.emplace(name, node.get());
      if (node->name == "complexType") idx.complex_types.emplace(name, node.get());
    }
  }
  return idx;
}

/// Child elements of a sequence/all/choice inside a complexType, or nullptr.
const xml::Element* particle_group(const xml::Element& complex_type) {
  for (const char* group : {"sequence", "all", "choice"}) {
    if (const auto* g = complex_type.child(group)) return g;
  }
  return nullptr;
}

void append_group(const xml::Element& group, std::vector<Parameter>& out) {
  for (const auto* el : group.children_named("element")) {
    std::string name = el->attribute_or("name", std::string(xml::local_part(el->attribute_or("ref"))));
    out.push_back(Parameter{name, normalize_datatype(el->attribute_or("type", "anyType"))});
  }
}

void parts_to_parameters(const xml::Element& message, const SchemaIndex& schema,
                         std::vector<Parameter>& out) {
  for (const auto* part : message.children_named("part")) {
    const std::string part_name = part->attribute_or("name");
    if (const auto* type = part->attribute("type")) {
      out.push_back(Parameter{part_name, normalize_datatype(*type)});
      continue;
    }
    const std::string element_ref = part->attribute_or("element");
    auto el_it = schema.elements.find(xml::local_part(element_ref));
    if (el_it == schema.elements.end()) {
      out.push_back(Parameter{std::string(xml::local_part(element_ref)), "anytype"});
      continue;
    }
    const xml::Element& element = *el_it->second;
    const xml::Element* complex = element.child("complexType");
    if (complex == nullptr) {
      if (const auto* type = element.attribute("type")) {
        auto ct = schema.complex_types.find(xml::local_part(*type));
        if (ct != schema.complex_types.end()) {
          complex = ct->second;
        } else {
          out.push_back(Parameter{element.attribute_or("name"), normalize_datatype(*type)});
          continue;
        }
      }
    }
    if (complex != nullptr) {
      if (const auto* group = particle_group(*complex)) append_group(*group, out);
      continue;
    }
    out.push_back(Parameter{element.attribute_or("name"), "anytype"});
  }
}

}  // namespace

WebService import_wsdl(std::string_view wsdl_xml, Timestamp load_time, const std::string& origin) {
  auto root = xml::parse(wsdl_xml, origin);
  if (root->name != "definitions") {
    throw Error(ErrorKind::Parse,
                origin + ": root element is <" + root->name + ">, expected WSDL 1.1 <definitions>");
  }

  std::map<std::string, const xml::Element*, std::less<>> messages;
  for (const auto* msg : root->children_named("message")) {
    messages.emplace(msg->attribute_or("name"), msg);
  }
  const SchemaIndex schema = index_schema(*root);

  const auto port_types = root->children_named("portType");
  if (port_types.empty()) throw Error(ErrorKind::Validation, origin + ": missing <portType>");

  WebService svc;
  std::set<std::string> seen;
  for (const auto* port_type : port_types) {
    for (const auto* op_el : port_type->children_named("operation")) {
      Operation op;
      op.name = op_el->attribute_or("name");
      if (op.name.empty() || !seen.insert(op.name).second) continue;
      auto resolve = [&](const char* direction, std::vector<Parameter>& params) {
        const xml::Element* io = op_el->child(direction);
        if (io == nullptr) return;
        const std::string ref = io->attribute_or("message");
        auto it = messages.find(xml::local_part(ref));
        if (it == messages.end()) {
          throw Error(ErrorKind::Validation, origin + ": line " + std::to_string(io->line) +
                                                 ": operation '" + op.name + "' " + direction +
                                                 " references unknown message '" + ref + "'");
        }
        parts_to_parameters(*it->second, schema, params);
      };
      resolve("input", op.inputs);
      resolve("output", op.outputs);
      svc.operations.push_back(std::move(op));
    }
  }
  if (svc.operations.empty()) {
    throw Error(ErrorKind::Validation, origin + ": <portType> declares no operations");
  }

  const xml::Element* service_el = root->child("service");
  if (service_el != nullptr) {
    svc.name = service_el->attribute_or("name");
    for (const auto* port : service_el->children_named("port")) {
      if (const auto* address = port->child("address")) {
        svc.url = address->attribute_or("location");
        break;
      }
    }
  }
  if (svc.name.empty()) svc.name = root->attribute_or("name");
  if (svc.name.empty()) svc.name = port_types.front()->attribute_or("name");
  svc.serviceKey = "ws." + format_timestamp(load_time);
  return svc;
}

}  // namespace procsel::registry
