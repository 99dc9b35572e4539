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

// Report serialization, the explain breakdown and the text summary.

#include <cstdio>
#include <sstream>

#include "config_json.hpp"
#include "file_util.hpp"
#include "procsel/error.hpp"
#include "procsel/ranking.hpp"

namespace procsel::ranking {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string series(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + num(values[i]);
  return out + "]";
}

ordered_json candidate_to_json(const Candidate& c) {
  const auto& f = c.functional;
  ordered_json fp;
  fp["nbInput"] = f.nbInput;
  fp["nbOutput"] = f.nbOutput;
  fp["strInputName"] = f.strInputName;
  fp["strOutputName"] = f.strOutputName;
  fp["strInputDatatype"] = f.strInputDatatype;
  fp["strOutputDatatype"] = f.strOutputDatatype;
  fp["total"] = f.total;
  fp["minAcceptable"] = f.minAcceptable;

  ordered_json scores;
  scores["fp"] = std::move(fp);
  scores["fpNorm"] = c.fpNorm;
  scores["uf_series"] = c.qos.ufSeries;
  scores["changes"] = c.qos.changes;
  scores["score_ac"] = c.qos.aggregateChange;
  scores["uf_norm"] = c.qos.ufLatestNorm;
  scores["ac_norm"] = c.qos.acNorm;
  scores["nfp"] = c.qos.nfp;
  scores["global"] = c.globalScore;

  ordered_json out;
  out["rank"] = c.rank;
  out["serviceKey"] = c.serviceKey;
  out["serviceName"] = c.serviceName;
  out["operation"] = c.operationName;
  out["scores"] = std::move(scores);
  out["rated"] = c.qos.rated;
  return out;
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return it->get<T>();
}

Candidate candidate_from_json(const json& j) {
  Candidate c;
  c.rank = j.at("rank").get<int>();
  c.serviceKey = j.at("serviceKey").get<std::string>();
  c.serviceName = get_or<std::string>(j, "serviceName", "");
  c.operationName = j.at("operation").get<std::string>();
  const json& s = j.at("scores");
  const json& fp = s.at("fp");
  auto& f = c.functional;
  f.nbInput = fp.at("nbInput").get<int>();
  f.nbOutput = fp.at("nbOutput").get<int>();
  f.strInputName = fp.at("strInputName").get<int>();
  f.strOutputName = fp.at("strOutputName").get<int>();
  f.strInputDatatype = fp.at("strInputDatatype").get<int>();
  f.strOutputDatatype = fp.at("strOutputDatatype").get<int>();
  f.total = fp.at("total").get<int>();
  f.minAcceptable = fp.at("minAcceptable").get<int>();
  f.passed = f.total >= f.minAcceptable;
  c.fpNorm = s.at("fpNorm").get<double>();
  c.qos.ufSeries = get_or<std::vector<double>>(s, "uf_series", {});
  c.qos.changes = get_or<std::vector<double>>(s, "changes", {});
  c.qos.aggregateChange = get_or<double>(s, "score_ac", 0.0);
  c.qos.ufLatestNorm = get_or<double>(s, "uf_norm", 0.0);
  c.qos.acNorm = get_or<double>(s, "ac_norm", 0.0);
  c.qos.nfp = get_or<double>(s, "nfp", 0.0);
  c.globalScore = s.at("global").get<double>();
  c.qos.rated = get_or<bool>(j, "rated", false);
  c.qos.ufLatest = c.qos.ufSeries.empty() ? 0.0 : c.qos.ufSeries.back();
  return c;
}

}  // namespace

std::string report_to_json(const SelectionReport& report) {
  ordered_json tasks = ordered_json::array();
  for (const auto& t : report.tasks) {
    ordered_json cands = ordered_json::array();
    for (const auto& c : t.candidates) cands.push_back(candidate_to_json(c));
    ordered_json task;
    task["taskId"] = t.requirement.taskId;
    task["taskName"] = t.requirement.taskName;
    task["candidates"] = std::move(cands);
    task["diagnostics"] = t.diagnostics;
    tasks.push_back(std::move(task));
  }
  ordered_json doc;
  doc["processId"] = report.processId;
  doc["tasks"] = std::move(tasks);
  doc["config"] = config_to_ordered_json(report.config);
  return doc.dump(2) + "\n";
}

SelectionReport report_from_json(std::string_view json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": " + detail::describe_json_error(json_text, e));
  }
  SelectionReport report;
  try {
    report.processId = get_or<std::string>(doc, "processId", "");
    for (const auto& t : doc.at("tasks")) {
      TaskSelection task;
      task.requirement.taskId = t.at("taskId").get<std::string>();
      task.requirement.taskName = get_or<std::string>(t, "taskName", "");
      for (const auto& c : t.at("candidates")) task.candidates.push_back(candidate_from_json(c));
      task.diagnostics = get_or<std::vector<std::string>>(t, "diagnostics", {});
      report.tasks.push_back(std::move(task));
    }
    if (auto it = doc.find("config"); it != doc.end() && it->is_object()) {
      report.config = config_from_json(it->dump(), {}, origin + " config").selection;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, origin + ": not a selection report (" + e.what() + ")");
  }
  return report;
}

std::string explain(const SelectionReport& report, std::string_view task_id, int rank) {
  const TaskSelection* task = nullptr;
  for (const auto& t : report.tasks) {
    if (t.requirement.taskId == task_id) task = &t;
  }
  if (task == nullptr) {
    throw Error(ErrorKind::NotFound, "report has no task '" + std::string(task_id) + "'");
  }
  if (rank < 1 || static_cast<std::size_t>(rank) > task->candidates.size()) {
    throw Error(ErrorKind::NotFound, "task '" + std::string(task_id) + "' has " +
                                         std::to_string(task->candidates.size()) +
                                         " ranked candidates; rank " + std::to_string(rank) +
                                         " does not exist");
  }
  const Candidate& c = task->candidates[static_cast<std::size_t>(rank - 1)];
  const auto& f = c.functional;
  const auto& cfg = report.config;
  const auto& t = cfg.scoreTable;
  const double w_stab = cfg.qos.stabilityWeight;
  const double w_fp = cfg.functionalWeight;

  std::ostringstream out;
  out << "task " << task->requirement.taskId;
  if (!task->requirement.taskName.empty()) out << " (" << task->requirement.taskName << ")";
  out << ", rank " << c.rank << " of " << task->candidates.size() << "\n";
  out << "candidate: " << c.serviceName << " / " << c.operationName << "  [" << c.serviceKey << "]\n\n";

  out << "functional matching\n";
  out << "  SCORE_nbInput          = " << f.nbInput << "  (input count: equal " << t.nbEqual
      << ", user offers more " << t.nbFavorable << ", user offers fewer " << t.nbUnfavorable << ")\n";
  out << "  SCORE_nbOutput         = " << f.nbOutput << "  (output count: equal " << t.nbEqual
      << ", user asks fewer " << t.nbFavorable << ", user asks more " << t.nbUnfavorable << ")\n";
  out << "  SCORE_strInputName     = " << f.strInputName << "  (" << t.stringSame
      << " per input name paired by exact or synonym match)\n";
  out << "  SCORE_strOutputName    = " << f.strOutputName << "  (" << t.stringSame
      << " per output name paired by exact or synonym match)\n";
  out << "  SCORE_strInputDatatype = " << f.strInputDatatype << "  (" << t.stringSame
      << " per input paired by identical datatype)\n";
  out << "  SCORE_strOutputDatatype = " << f.strOutputDatatype << "  (" << t.stringSame
      << " per output paired by identical datatype)\n";
  out << "  SCORE_FP = " << f.total << "  (sum of the six components)\n";
  out << "  SCORE_min_FP = " << f.minAcceptable << "  (" << t.nbUnfavorable << " + " << t.nbFavorable
      << " + " << 2 * t.stringSame << "*min(user inputs, operation inputs) + " << 2 * t.stringSame
      << "*user outputs)\n";
  out << "  gate: " << (f.total >= f.minAcceptable ? "passed" : "failed") << " (" << f.total
      << (f.total >= f.minAcceptable ? " >= " : " < ") << f.minAcceptable << ")\n\n";

  out << "QoS\n";
  if (!c.qos.rated) {
    out << "  no QoS history: unrated, SCORE_NFP = 0\n";
  } else {
    out << "  UF series (oldest -> newest) = " << series(c.qos.ufSeries)
        << "  (weighted z-scores against the pool at each time gap)\n";
    out << "  changes = " << series(c.qos.changes) << "  (UF_j / UF_i - 1 between consecutive gaps)\n";
    out << "  SCORE_AC = " << num(c.qos.aggregateChange) << "  (sum of changes)\n";
    out << "  SCORE_UF normalised = " << num(c.qos.ufLatestNorm)
        << "  (newest UF, min-max over rated candidates)\n";
    out << "  SCORE_AC normalised = " << num(c.qos.acNorm) << "  (SCORE_AC, min-max over rated candidates)\n";
    out << "  SCORE_NFP = " << num(w_stab) << " * " << num(c.qos.ufLatestNorm) << " + " << num(1.0 - w_stab)
        << " * " << num(c.qos.acNorm) << " = " << num(c.qos.nfp) << "\n";
  }
  out << "\nglobal\n";
  out << "  fpNorm = " << num(c.fpNorm) << "  (SCORE_FP, min-max over the gated pool)\n";
  out << "  global score = " << num(w_fp) << " * " << num(c.fpNorm) << " + " << num(1.0 - w_fp) << " * "
      << num(c.qos.nfp) << " = " << num(c.globalScore) << "\n";
  return out.str();
}

std::string render_text(const SelectionReport& report) {
  std::ostringstream out;
  out << "process " << report.processId << "\n";
  for (const auto& t : report.tasks) {
    out << "\ntask " << t.requirement.taskId;
    if (!t.requirement.taskName.empty()) out << " (" << t.requirement.taskName << ")";
    out << "\n";
    if (t.candidates.empty()) out << "  no candidates\n";
    for (const auto& c : t.candidates) {
      char line[512];
      std::snprintf(line, sizeof line, "  %2d. %-24s %-20s global=%.4f fp=%d/%d nfp=%.4f%s\n", c.rank,
                    c.serviceName.c_str(), c.operationName.c_str(), c.globalScore, c.functional.total,
                    c.functional.minAcceptable, c.qos.nfp, c.qos.rated ? "" : " (unrated)");
      out << line;
    }
    for (const auto& d : t.diagnostics) out << "  note: " << d << "\n";
  }
  return out.str();
}

}  // namespace procsel::ranking
