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

#include "procsel/qos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "procsel/error.hpp"

namespace procsel::qos {

QosConfig QosConfig::defaults() {
  QosConfig cfg;
  cfg.attributes = {
      {"availability", Direction::Maximize, 0.4},
      {"executionTimeMs", Direction::Minimize, 0.4},
      {"totalCalls", Direction::Maximize, 0.2},
  };
  return cfg;
}

void QosConfig::validate() const {
  if (attributes.empty()) throw Error(ErrorKind::Config, "qos.attributes: at least one attribute is required");
  std::set<std::string> names;
  double sum = 0.0;
  for (const auto& spec : attributes) {
    if (spec.name.empty()) throw Error(ErrorKind::Config, "qos.attributes: attribute without a name");
    if (!names.insert(spec.name).second) {
      throw Error(ErrorKind::Config, "qos.attributes: attribute '" + spec.name + "' listed twice");
    }
    if (!(spec.weight > 0.0 && spec.weight <= 1.0)) {
      throw Error(ErrorKind::Config, "qos.attributes: weight of '" + spec.name + "' must be in (0, 1]");
    }
    sum += spec.weight;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::Config, "qos.attributes: weights sum to " + std::to_string(sum) + ", expected 1");
  }
  if (nGaps < 1) throw Error(ErrorKind::Config, "qos.n_gaps must be at least 1");
  if (!(stabilityWeight > 0.0 && stabilityWeight <= 1.0)) {
    throw Error(ErrorKind::Config, "qos.stability_weight must be in (0, 1]");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::Config, "qos.epsilon must be a positive number");
  }
}

Alignment align_snapshots(std::span<const std::vector<registry::QosSnapshot>* const> pool,
                          int n_gaps, const std::vector<AttributeSpec>& specs) {
  const auto gaps = static_cast<std::size_t>(std::max(n_gaps, 1));
  Alignment out;
  out.histories.reserve(pool.size());
  for (const auto* history : pool) {
    AlignedHistory aligned;
    const std::size_t take = std::min(gaps, history->size());
    aligned.firstIndex = gaps - take;
    aligned.snapshots.assign(history->end() - static_cast<std::ptrdiff_t>(take), history->end());
    out.histories.push_back(std::move(aligned));
  }

  out.stats.perIndex.resize(gaps);
  for (std::size_t idx = 0; idx < gaps; ++idx) {
    for (const auto& spec : specs) {
      double sum = 0.0;
      std::size_t n = 0;
      for (const auto& h : out.histories) {
        if (!h.rated() || idx < h.firstIndex) continue;
        if (auto v = h.snapshots[idx - h.firstIndex].attribute(spec.name)) {
          sum += *v;
          ++n;
        }
      }
      if (n == 0) continue;
      const double mean = sum / static_cast<double>(n);
      double sq = 0.0;
      for (const auto& h : out.histories) {
        if (!h.rated() || idx < h.firstIndex) continue;
        if (auto v = h.snapshots[idx - h.firstIndex].attribute(spec.name)) {
          sq += (*v - mean) * (*v - mean);
        }
      }
      out.stats.perIndex[idx][spec.name] =
          AttributeStats{mean, std::sqrt(sq / static_cast<double>(n)), n};
    }
  }
  return out;
}

double utility(const registry::QosSnapshot& snap, const std::map<std::string, AttributeStats>& stats,
               const std::vector<AttributeSpec>& specs, double epsilon) {
  double uf = 0.0;
  for (const auto& spec : specs) {
    const auto value = snap.attribute(spec.name);
    if (!value) {
      throw Error(ErrorKind::Validation, "QoS snapshot at " + format_timestamp(snap.timestamp) +
                                             " has no attribute '" + spec.name + "'");
    }
    auto it = stats.find(spec.name);
    double z = 0.0;
    if (it != stats.end() && it->second.stddev >= epsilon) {
      z = (*value - it->second.mean) / it->second.stddev;
    }
    uf += spec.direction == Direction::Maximize ? spec.weight * z : spec.weight * (1.0 - z);
  }
  return uf;
}

double change(double uf_earlier, double uf_later, double epsilon) {
  if (!(std::abs(uf_earlier) >= epsilon)) return 0.0;
  return uf_later / uf_earlier - 1.0;
}

double aggregate_change(std::span<const double> uf_series, double epsilon) {
  double total = 0.0;
  for (std::size_t i = 1; i < uf_series.size(); ++i) {
    total += change(uf_series[i - 1], uf_series[i], epsilon);
  }
  return total;
}

double nfp_score(double uf_latest_norm, double ac_norm, double stability_weight) {
  return stability_weight * uf_latest_norm + (1.0 - stability_weight) * ac_norm;
}

std::vector<double> normalize_pool(std::span<const double> values, double epsilon) {
  std::vector<double> out(values.size(), 1.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double span = *hi - *lo;
  if (!(span >= epsilon)) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] == *hi ? 1.0 : (values[i] - *lo) / span;
  }
  return out;
}

std::vector<QosScores> score_pool(std::span<const std::vector<registry::QosSnapshot>* const> pool,
                                  std::span<const std::string> canonical_keys,
                                  const QosConfig& config) {
  // Canonical order for every accumulation below.
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (canonical_keys.size() == pool.size()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return canonical_keys[a] < canonical_keys[b]; });
  }
  std::vector<const std::vector<registry::QosSnapshot>*> ordered;
  ordered.reserve(pool.size());
  for (std::size_t i : order) ordered.push_back(pool[i]);

  const Alignment alignment = align_snapshots(ordered, config.nGaps, config.attributes);

  std::vector<QosScores> scores(pool.size());
  std::vector<std::size_t> rated;  // positions in `ordered`
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const AlignedHistory& h = alignment.histories[k];
    if (!h.rated()) continue;
    QosScores& s = scores[order[k]];
    s.rated = true;
    for (std::size_t j = 0; j < h.snapshots.size(); ++j) {
      s.ufSeries.push_back(utility(h.snapshots[j], alignment.stats.perIndex[h.firstIndex + j],
                                   config.attributes, config.epsilon));
    }
    for (std::size_t j = 1; j < s.ufSeries.size(); ++j) {
      s.changes.push_back(change(s.ufSeries[j - 1], s.ufSeries[j], config.epsilon));
    }
    s.aggregateChange = std::accumulate(s.changes.begin(), s.changes.end(), 0.0);
    s.ufLatest = s.ufSeries.back();
    rated.push_back(k);
  }

  std::vector<double> latest, ac;
  for (std::size_t k : rated) {
    latest.push_back(scores[order[k]].ufLatest);
    ac.push_back(scores[order[k]].aggregateChange);
  }
  const auto latest_norm = normalize_pool(latest, config.epsilon);
  const auto ac_norm = normalize_pool(ac, config.epsilon);
  for (std::size_t r = 0; r < rated.size(); ++r) {
    QosScores& s = scores[order[rated[r]]];
    s.ufLatestNorm = latest_norm[r];
    s.acNorm = ac_norm[r];
    s.nfp = nfp_score(s.ufLatestNorm, s.acNorm, config.stabilityWeight);
  }
  return scores;
}

}  // namespace procsel::qos
