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

#include "xml.hpp"

#include <expat.h>

#include "procsel/error.hpp"

namespace procsel::xml {

namespace {

constexpr char kNsSep = '\x01';

void split_name(const XML_Char* raw, std::string& ns, std::string& local) {
  std::string_view name(raw);
  auto pos = name.find(kNsSep);
  if (pos == std::string_view::npos) {
    ns.clear();
    local.assign(name);
  } else {
    ns.assign(name.substr(0, pos));
    local.assign(name.substr(pos + 1));
  }
}

struct BuildState {
  XML_Parser parser = nullptr;
  std::unique_ptr<Element> root;
  std::vector<Element*> stack;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<BuildState*>(user);
  auto el = std::make_unique<Element>();
  split_name(name, el->ns, el->name);
  el->line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    std::string ans, alocal;
    split_name(attrs[i], ans, alocal);
    el->attributes.emplace(alocal, attrs[i + 1]);
  }
  Element* raw = el.get();
  if (st->stack.empty()) {
    st->root = std::move(el);
  } else {
    st->stack.back()->children.push_back(std::move(el));
  }
  st->stack.push_back(raw);
}

void on_end(void* user, const XML_Char*) {
  static_cast<BuildState*>(user)->stack.pop_back();
}

void on_text(void* user, const XML_Char* s, int len) {
  auto* st = static_cast<BuildState*>(user);
  if (!st->stack.empty()) st->stack.back()->text.append(s, static_cast<std::size_t>(len));
}

}  // namespace

const std::string* Element::attribute(const std::string& local) const {
  auto it = attributes.find(local);
  return it == attributes.end() ? nullptr : &it->second;
}

std::string Element::attribute_or(const std::string& local, std::string fallback) const {
  const auto* v = attribute(local);
  return v ? *v : std::move(fallback);
}

const Element* Element::child(std::string_view local) const {
  for (const auto& c : children) {
    if (c->name == local) return c.get();
  }
  return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view local) const {
  std::vector<const Element*> out;
  for (const auto& c : children) {
    if (c->name == local) out.push_back(c.get());
  }
  return out;
}

std::unique_ptr<Element> parse(std::string_view document, const std::string& origin) {
  BuildState st;
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreateNS(nullptr, kNsSep), &XML_ParserFree);
  if (!parser) throw Error(ErrorKind::Parse, origin + ": cannot allocate XML parser");
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw Error(ErrorKind::Parse,
                origin + ": line " + std::to_string(XML_GetCurrentLineNumber(parser.get())) +
                    ", column " + std::to_string(XML_GetCurrentColumnNumber(parser.get())) + ": " +
                    XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!st.root) throw Error(ErrorKind::Parse, origin + ": empty XML document");
  return std::move(st.root);
}

std::string_view local_part(std::string_view qname) {
  auto pos = qname.rfind(':');
  return pos == std::string_view::npos ? qname : qname.substr(pos + 1);
}

}  // namespace procsel::xml
