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

#include <utility>
#include <vector>

#include "procsel/bpmn.hpp"
#include "procsel/lexicon.hpp"
#include "procsel/registry.hpp"

namespace procsel::functional {

/// Points awarded per comparison. "Favorable" is the better of the two
/// unequal-count outcomes: more inputs offered by the user than the operation
/// asks for, or fewer outputs requested than the operation returns.
struct ScoreTable {
  int nbEqual = 3;
  int nbFavorable = 2;
  int nbUnfavorable = 1;
  int stringSame = 2;
  int stringDifferent = 0;

  /// nbEqual > nbFavorable > nbUnfavorable and stringSame > stringDifferent >= 0.
  bool valid() const;

  bool operator==(const ScoreTable&) const = default;
};

enum class CompareBy { Name, Datatype };

struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (user index, operation index)
  std::size_t matchedCount = 0;
};

struct FunctionalScore {
  int nbInput = 0;
  int nbOutput = 0;
  int strInputName = 0;
  int strOutputName = 0;
  int strInputDatatype = 0;
  int strOutputDatatype = 0;
  int total = 0;
  int minAcceptable = 0;
  bool passed = false;

  bool operator==(const FunctionalScore&) const = default;
};

/// A gated (service, operation) pair. Pointers refer into the registry the
/// candidate was produced from, which must outlive it.
struct GatedCandidate {
  const registry::WebService* service = nullptr;
  const registry::Operation* operation = nullptr;
  FunctionalScore score;
};

struct GateResult {
  std::vector<GatedCandidate> candidates;
  std::size_t matchedCategories = 0;
  std::size_t scoredOperations = 0;
};

bool match_context(const bpmn::TaskRequirement& req, const registry::ServiceCategory& category,
                   const lexicon::SynonymLexicon& lex);

/// Whether two parameter names are equivalent: every keyword of one side is
/// matched (terms_match) by some keyword of the other side, in either
/// direction. Names without any keyword fall back to case-insensitive equality.
bool names_match(std::string_view a, std::string_view b, const lexicon::SynonymLexicon& lex);

/// Maximum-cardinality one-to-one pairing of user parameters with operation
/// parameters. Augmenting paths are explored in ascending (user, operation)
/// index order, so the chosen pairs are deterministic.
Pairing pair_parameters(const std::vector<registry::Parameter>& user,
                        const std::vector<registry::Parameter>& op,
                        const lexicon::SynonymLexicon& lex, CompareBy by);

/// Minimum passing functional score: the score of a candidate that answers
/// every requested output and matches as many inputs as both sides allow,
/// with the unfavourable input count and the favourable output count.
int min_acceptable_score(std::size_t user_inputs, std::size_t op_inputs, std::size_t user_outputs,
                         const ScoreTable& table);

FunctionalScore score_functional(const bpmn::TaskRequirement& req, const registry::Operation& op,
                                 const lexicon::SynonymLexicon& lex, const ScoreTable& table);

/// Context filter followed by the functional gate, in registry order.
GateResult gate(const bpmn::TaskRequirement& req, const registry::ServiceRegistry& reg,
                const lexicon::SynonymLexicon& lex, const ScoreTable& table);

/// Passing candidates only; shorthand for gate(...).candidates.
std::vector<GatedCandidate> gate_candidates(const bpmn::TaskRequirement& req,
                                            const registry::ServiceRegistry& reg,
                                            const lexicon::SynonymLexicon& lex,
                                            const ScoreTable& table);

}  // namespace procsel::functional
