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

#include "procsel/functional.hpp"

#include <algorithm>

namespace procsel::functional {

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

bool covers(const std::vector<lexicon::Term>& from, const std::vector<lexicon::Term>& into,
            const lexicon::SynonymLexicon& lex) {
  return std::all_of(from.begin(), from.end(), [&](const lexicon::Term& t) {
    return std::any_of(into.begin(), into.end(),
                       [&](const lexicon::Term& u) { return lexicon::terms_match(t, u, lex); });
  });
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Kuhn's augmenting-path search. Graphs here have a handful of vertices per
// side, so the O(V*E) bound is irrelevant and the fixed visiting order keeps
// the result reproducible.
bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<char>& visited, std::vector<std::size_t>& match_of_op) {
  for (std::size_t o : adj[u]) {
    if (visited[o]) continue;
    visited[o] = 1;
    if (match_of_op[o] == kUnmatched || augment(match_of_op[o], adj, visited, match_of_op)) {
      match_of_op[o] = u;
      return true;
    }
  }
  return false;
}

int count_score(std::size_t user, std::size_t op, bool more_is_favorable, const ScoreTable& t) {
  if (user == op) return t.nbEqual;
  const bool user_has_more = user > op;
  return user_has_more == more_is_favorable ? t.nbFavorable : t.nbUnfavorable;
}

int string_score(std::size_t matched, std::size_t user_count, const ScoreTable& t) {
  return static_cast<int>(matched) * t.stringSame +
         static_cast<int>(user_count - matched) * t.stringDifferent;
}

}  // namespace

bool ScoreTable::valid() const {
  return nbEqual > nbFavorable && nbFavorable > nbUnfavorable && stringSame > stringDifferent &&
         stringDifferent >= 0;
}

bool match_context(const bpmn::TaskRequirement& req, const registry::ServiceCategory& category,
                   const lexicon::SynonymLexicon& lex) {
  return lexicon::keyword_sets_match(req.contextKeywords, category.keywords, lex);
}

bool names_match(std::string_view a, std::string_view b, const lexicon::SynonymLexicon& lex) {
  const auto ta = lexicon::extract_keywords(a);
  const auto tb = lexicon::extract_keywords(b);
  if (ta.empty() || tb.empty()) return lower(a) == lower(b);
  return covers(ta, tb, lex) || covers(tb, ta, lex);
}

Pairing pair_parameters(const std::vector<registry::Parameter>& user,
                        const std::vector<registry::Parameter>& op,
                        const lexicon::SynonymLexicon& lex, CompareBy by) {
  std::vector<std::vector<std::size_t>> adj(user.size());
  for (std::size_t u = 0; u < user.size(); ++u) {
    for (std::size_t o = 0; o < op.size(); ++o) {
      const bool edge = by == CompareBy::Name ? names_match(user[u].name, op[o].name, lex)
                                              : user[u].datatype == op[o].datatype;
      if (edge) adj[u].push_back(o);
    }
  }

  std::vector<std::size_t> match_of_op(op.size(), kUnmatched);
  std::vector<char> visited(op.size());
  for (std::size_t u = 0; u < user.size(); ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(u, adj, visited, match_of_op);
  }

  Pairing out;
  for (std::size_t o = 0; o < op.size(); ++o) {
    if (match_of_op[o] != kUnmatched) out.pairs.emplace_back(match_of_op[o], o);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.matchedCount = out.pairs.size();
  return out;
}

int min_acceptable_score(std::size_t user_inputs, std::size_t op_inputs, std::size_t user_outputs,
                         const ScoreTable& table) {
  const int matched_inputs = static_cast<int>(std::min(user_inputs, op_inputs));
  const int matched_outputs = static_cast<int>(user_outputs);
  // Names and datatypes each earn stringSame per matched parameter.
  return table.nbUnfavorable + table.nbFavorable + 2 * table.stringSame * matched_inputs +
         2 * table.stringSame * matched_outputs;
}

FunctionalScore score_functional(const bpmn::TaskRequirement& req, const registry::Operation& op,
                                 const lexicon::SynonymLexicon& lex, const ScoreTable& table) {
  FunctionalScore s;
  s.nbInput = count_score(req.inputs.size(), op.inputs.size(), /*more_is_favorable=*/true, table);
  s.nbOutput = count_score(req.outputs.size(), op.outputs.size(), /*more_is_favorable=*/false, table);

  auto matched = [&](const auto& user, const auto& offered, CompareBy by) {
    return pair_parameters(user, offered, lex, by).matchedCount;
  };
  s.strInputName = string_score(matched(req.inputs, op.inputs, CompareBy::Name), req.inputs.size(), table);
  s.strOutputName = string_score(matched(req.outputs, op.outputs, CompareBy::Name), req.outputs.size(), table);
  s.strInputDatatype =
      string_score(matched(req.inputs, op.inputs, CompareBy::Datatype), req.inputs.size(), table);
  s.strOutputDatatype =
      string_score(matched(req.outputs, op.outputs, CompareBy::Datatype), req.outputs.size(), table);

  s.total = s.nbInput + s.nbOutput + s.strInputName + s.strOutputName + s.strInputDatatype +
            s.strOutputDatatype;
  s.minAcceptable = min_acceptable_score(req.inputs.size(), op.inputs.size(), req.outputs.size(), table);
  s.passed = s.total >= s.minAcceptable;
  return s;
}

GateResult gate(const bpmn::TaskRequirement& req, const registry::ServiceRegistry& reg,
                const lexicon::SynonymLexicon& lex, const ScoreTable& table) {
  GateResult out;
  for (const auto& category : reg.categories) {
    if (!match_context(req, category, lex)) continue;
    ++out.matchedCategories;
    for (const auto& service : category.services) {
      for (const auto& op : service.operations) {
        ++out.scoredOperations;
        FunctionalScore score = score_functional(req, op, lex, table);
        if (score.passed) out.candidates.push_back(GatedCandidate{&service, &op, score});
      }
    }
  }
  return out;
}

std::vector<GatedCandidate> gate_candidates(const bpmn::TaskRequirement& req,
                                            const registry::ServiceRegistry& reg,
                                            const lexicon::SynonymLexicon& lex,
                                            const ScoreTable& table) {
  return gate(req, reg, lex, table).candidates;
}

}  // namespace procsel::functional
