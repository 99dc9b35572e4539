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
#include <vector>

#include "procsel/bpmn.hpp"
#include "procsel/config.hpp"
#include "procsel/functional.hpp"
#include "procsel/lexicon.hpp"
#include "procsel/qos.hpp"
#include "procsel/registry.hpp"

namespace procsel::ranking {

struct Candidate {
  std::string serviceKey;
  std::string serviceName;
  std::string operationName;
  functional::FunctionalScore functional;
  qos::QosScores qos;
  double fpNorm = 0.0;
  double globalScore = 0.0;
  int rank = 0;
};

struct TaskSelection {
  bpmn::TaskRequirement requirement;
  std::vector<Candidate> candidates;  // ranked
  std::vector<std::string> diagnostics;
};

struct SelectionReport {
  std::string processId;
  std::vector<TaskSelection> tasks;  // BPMN document order
  SelectionConfig config;
};

/// w * fpNorm + (1 - w) * nfp.
double global_score(double fp_norm, double nfp, double functional_weight);

/// Orders by global score, then functional total (both descending), then
/// serviceKey and operation name (ascending), and assigns ranks 1..k.
std::vector<Candidate> rank_candidates(std::vector<Candidate> candidates);

/// QoS scoring, functional normalisation, global score and ranking of one
/// task's gated pool.
std::vector<Candidate> score_gated_pool(const std::vector<functional::GatedCandidate>& gated,
                                        const SelectionConfig& config);

/// Runs the whole selection for every service task of the process.
/// Throws Error(Validation) when a task cannot be bound to its annotation.
SelectionReport select_for_process(const bpmn::BusinessProcess& process,
                                   const registry::ServiceRegistry& registry,
                                   const lexicon::SynonymLexicon& lex, const SelectionConfig& config);

/// Report serialization. Keys are emitted in a fixed order, so equal reports
/// serialize to identical bytes.
std::string report_to_json(const SelectionReport& report);

/// Reads back what report_to_json() wrote. Task requirements carry only the
/// task id and name.
SelectionReport report_from_json(std::string_view json_text, const std::string& origin = "<report>");

/// Plain-text breakdown of how one ranked candidate was scored.
/// Throws Error(NotFound) for an unknown task id or rank.
std::string explain(const SelectionReport& report, std::string_view task_id, int rank);

/// Compact human-readable summary of a report.
std::string render_text(const SelectionReport& report);

}  // namespace procsel::ranking
