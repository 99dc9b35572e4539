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

#include "procsel/ranking.hpp"

#include <algorithm>

namespace procsel::ranking {

double global_score(double fp_norm, double nfp, double functional_weight) {
  return functional_weight * fp_norm + (1.0 - functional_weight) * nfp;
}

std::vector<Candidate> rank_candidates(std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.globalScore != b.globalScore) return a.globalScore > b.globalScore;
    if (a.functional.total != b.functional.total) return a.functional.total > b.functional.total;
    if (a.serviceKey != b.serviceKey) return a.serviceKey < b.serviceKey;
    return a.operationName < b.operationName;
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i].rank = static_cast<int>(i + 1);
  return candidates;
}

std::vector<Candidate> score_gated_pool(const std::vector<functional::GatedCandidate>& gated,
                                        const SelectionConfig& config) {
  // QoS needs pool-wide statistics, so it runs only once the pool is complete.
  std::vector<const std::vector<registry::QosSnapshot>*> histories;
  std::vector<std::string> keys;
  std::vector<double> totals;
  for (const auto& g : gated) {
    histories.push_back(&g.operation->qosHistory);
    keys.push_back(g.service->serviceKey + '\x1f' + g.operation->name);
    totals.push_back(static_cast<double>(g.score.total));
  }
  const auto qos_scores = qos::score_pool(histories, keys, config.qos);
  const auto fp_norm = qos::normalize_pool(totals, config.qos.epsilon);

  std::vector<Candidate> out;
  out.reserve(gated.size());
  for (std::size_t i = 0; i < gated.size(); ++i) {
    Candidate c;
    c.serviceKey = gated[i].service->serviceKey;
    c.serviceName = gated[i].service->name;
    c.operationName = gated[i].operation->name;
    c.functional = gated[i].score;
    c.qos = qos_scores[i];
    c.fpNorm = fp_norm[i];
    c.globalScore = global_score(c.fpNorm, c.qos.nfp, config.functionalWeight);
    out.push_back(std::move(c));
  }
  return rank_candidates(std::move(out));
}

SelectionReport select_for_process(const bpmn::BusinessProcess& process,
                                   const registry::ServiceRegistry& registry,
                                   const lexicon::SynonymLexicon& lex, const SelectionConfig& config) {
  config.validate();
  SelectionReport report;
  report.processId = process.id;
  report.config = config;

  for (auto& requirement : bpmn::bind_requirements(process)) {
    TaskSelection task;
    const auto gate = functional::gate(requirement, registry, lex, config.scoreTable);
    if (gate.matchedCategories == 0) {
      std::string ctx;
      for (const auto& k : requirement.contextKeywords) ctx += (ctx.empty() ? "" : ", ") + k;
      task.diagnostics.push_back("no category matched context {" + ctx + "}");
    } else if (gate.candidates.empty()) {
      task.diagnostics.push_back("no operation passed functional gate (" +
                                 std::to_string(gate.scoredOperations) + " scored in " +
                                 std::to_string(gate.matchedCategories) + " matching categories)");
    }
    task.candidates = score_gated_pool(gate.candidates, config);
    for (const auto& c : task.candidates) {
      if (!c.qos.rated) {
        task.diagnostics.push_back(c.serviceKey + "/" + c.operationName +
                                   ": no QoS history, ranked with nfp = 0");
      }
    }
    task.requirement = std::move(requirement);
    report.tasks.push_back(std::move(task));
  }
  return report;
}

}  // namespace procsel::ranking
