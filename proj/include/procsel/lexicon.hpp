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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace procsel::lexicon {

/// A lowercase token made only of ASCII letters and digits. Instances are
/// produced by extract_keywords() or normalize_term(); the invariant is not
/// re-checked on every copy.
using Term = std::string;
using TermSet = std::set<Term>;

/// Splits an identifier or phrase into keywords.
///
/// Boundaries: lower->upper case changes ("userName"), the end of an upper-case
/// run followed by a capitalised word ("HTTPServer" -> http, server), letter/digit
/// changes, and every character that is not an ASCII letter or digit. Tokens are
/// lowercased, stopwords {a, an, the, of, to, and, or, get, set} are dropped,
/// and repeats are removed keeping the first occurrence.
std::vector<Term> extract_keywords(std::string_view raw);

/// Same as extract_keywords() but collected into a set.
TermSet keyword_set(std::string_view raw);

/// Lowercases and strips everything except letters and digits ("E-Mail" ->
/// "email"). Used for lexicon entries, which name a single term each.
Term normalize_term(std::string_view raw);

bool is_stopword(std::string_view token);

/// File-backed stand-in for WordNet synsets. Immutable once built.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  /// Builds a lexicon from raw entries. Keys and values are normalized, the
  /// relation is closed under symmetry and self-references are dropped.
  /// Throws Error(Validation) for entries that normalize to nothing.
  static SynonymLexicon from_entries(const std::map<std::string, std::vector<std::string>>& raw);

  /// Parses the JSON lexicon format: {"buy": ["purchase"], ...}.
  static SynonymLexicon from_json(std::string_view json_text, const std::string& origin = "<lexicon>");
  static SynonymLexicon load(const std::filesystem::path& path);

  /// Synonyms of a term; empty for unknown terms.
  const TermSet& synonyms(const Term& term) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<Term, TermSet>& entries() const { return entries_; }

 private:
  std::map<Term, TermSet> entries_;
};

/// Two-step match: exact equality, then non-empty intersection of
/// {a} + syn(a) and {b} + syn(b). Reflexive and symmetric, not transitive.
bool terms_match(const Term& a, const Term& b, const SynonymLexicon& lex);

/// True iff some pair (u, t) matches. False when either side is empty.
bool keyword_sets_match(const TermSet& user, const TermSet& target, const SynonymLexicon& lex);

}  // namespace procsel::lexicon
