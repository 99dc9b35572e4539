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

#include "procsel/lexicon.hpp"

#include <algorithm>
#include <array>

#include "file_util.hpp"
#include "json.hpp"
#include "procsel/error.hpp"

namespace procsel::lexicon {

namespace {

constexpr std::array<std::string_view, 9> kStopwords = {"a",   "an",  "the", "of", "to",
                                                        "and", "or", "get", "set"};

enum class CharClass { Lower, Upper, Digit, Other };

CharClass classify(char c) {
  if (c >= 'a' && c <= 'z') return CharClass::Lower;
  if (c >= 'A' && c <= 'Z') return CharClass::Upper;
  if (c >= '0' && c <= '9') return CharClass::Digit;
  return CharClass::Other;
}

char to_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

bool is_stopword(std::string_view token) {
  return std::find(kStopwords.begin(), kStopwords.end(), token) != kStopwords.end();
}

std::vector<Term> extract_keywords(std::string_view raw) {
  std::vector<Term> tokens;
  std::string current;

  auto flush = [&] {
    if (current.empty()) return;
    if (!is_stopword(current) && std::find(tokens.begin(), tokens.end(), current) == tokens.end()) {
      tokens.push_back(current);
    }
    current.clear();
  };

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const CharClass cls = classify(raw[i]);
    if (cls == CharClass::Other) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const CharClass prev = classify(raw[i - 1]);
      bool boundary = false;
      if ((prev == CharClass::Digit) != (cls == CharClass::Digit)) {
        boundary = true;
      } else if (prev == CharClass::Lower && cls == CharClass::Upper) {
        boundary = true;
      } else if (prev == CharClass::Upper && cls == CharClass::Upper && i + 1 < raw.size() &&
                 classify(raw[i + 1]) == CharClass::Lower) {
        boundary = true;  // "HTTPServer": split before the 'S'
      }
      if (boundary) flush();
    }
    current.push_back(to_lower(raw[i]));
  }
  flush();
  return tokens;
}

TermSet keyword_set(std::string_view raw) {
  auto tokens = extract_keywords(raw);
  return TermSet(tokens.begin(), tokens.end());
}

Term normalize_term(std::string_view raw) {
  Term out;
  for (char c : raw) {
    if (classify(c) != CharClass::Other) out.push_back(to_lower(c));
  }
  return out;
}

SynonymLexicon SynonymLexicon::from_entries(
    const std::map<std::string, std::vector<std::string>>& raw) {
  SynonymLexicon lex;
  for (const auto& [key, values] : raw) {
    Term head = normalize_term(key);
    if (head.empty()) {
      throw Error(ErrorKind::Validation, "lexicon entry '" + key + "' has no letters or digits");
    }
    for (const auto& value : values) {
      Term syn = normalize_term(value);
      if (syn.empty()) {
        throw Error(ErrorKind::Validation,
                    "lexicon synonym '" + value + "' of '" + key + "' has no letters or digits");
      }
      if (syn == head) continue;
      lex.entries_[head].insert(syn);
      lex.entries_[syn].insert(head);
    }
  }
  return lex;
}

SynonymLexicon SynonymLexicon::from_json(std::string_view json_text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": " + detail::describe_json_error(json_text, e));
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::Parse, origin + ": lexicon must be a JSON object of term -> [synonyms]");
  }
  std::map<std::string, std::vector<std::string>> raw;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array()) {
      throw Error(ErrorKind::Parse, origin + ": entry '" + key + "' must be an array of strings");
    }
    auto& slot = raw[key];
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw Error(ErrorKind::Parse, origin + ": entry '" + key + "' must be an array of strings");
      }
      slot.push_back(item.get<std::string>());
    }
  }
  try {
    return from_entries(raw);
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ": " + e.what());
  }
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  return from_json(detail::read_file(path), path.string());
}

const TermSet& SynonymLexicon::synonyms(const Term& term) const {
  static const TermSet kEmpty;
  auto it = entries_.find(term);
  return it == entries_.end() ? kEmpty : it->second;
}

bool terms_match(const Term& a, const Term& b, const SynonymLexicon& lex) {
  if (a == b) return true;
  const TermSet& syn_a = lex.synonyms(a);
  const TermSet& syn_b = lex.synonyms(b);
  if (syn_a.count(b) || syn_b.count(a)) return true;
  // Both sets are sorted; walk them together.
  auto ia = syn_a.begin();
  auto ib = syn_b.begin();
  while (ia != syn_a.end() && ib != syn_b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

bool keyword_sets_match(const TermSet& user, const TermSet& target, const SynonymLexicon& lex) {
  for (const auto& u : user) {
    for (const auto& t : target) {
      if (terms_match(u, t, lex)) return true;
    }
  }
  return false;
}

}  // namespace procsel::lexicon
