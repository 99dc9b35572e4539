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

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace procsel::xml {

/// Minimal namespace-aware DOM built on expat. Element and attribute names
/// are split into (namespace URI, local name).
struct Element {
  std::string ns;
  std::string name;
  std::map<std::string, std::string> attributes;  // keyed by local name
  std::vector<std::unique_ptr<Element>> children;
  std::string text;  // concatenated character data of this element only
  int line = 0;

  const std::string* attribute(const std::string& local) const;
  std::string attribute_or(const std::string& local, std::string fallback = {}) const;

  /// First direct child with the given local name, or nullptr.
  const Element* child(std::string_view local) const;
  std::vector<const Element*> children_named(std::string_view local) const;

  /// Depth-first, document order, including this element.
  template <typename Fn>
  void visit(Fn&& fn) const {
    fn(*this);
    for (const auto& c : children) c->visit(fn);
  }
};

/// Throws Error(Parse) with "<origin>: line L, column C: <reason>".
std::unique_ptr<Element> parse(std::string_view document, const std::string& origin);

/// "tns:Foo" -> "Foo".
std::string_view local_part(std::string_view qname);

}  // namespace procsel::xml
