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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "procsel/registry.hpp"

namespace procsel::qos {

// Dynamic QoS scoring over a pool of candidate operations.
//
// Every candidate contributes its most recent snapshots, right-aligned onto
// gap indices 0..nGaps-1 (nGaps-1 is the newest). At each index the pool mean
// and population standard deviation of every attribute are computed over the
// candidates that have a snapshot there; the utility of a snapshot is the
// weighted sum of its z-scores (maximised attributes) and of one minus its
// z-scores (minimised attributes). A candidate's utility series is then
// summarised by its relative changes between consecutive gaps and by its
// newest value; both are min-max normalised over the rated pool and blended
// with the stability weight.

enum class Direction { Maximize, Minimize };

struct AttributeSpec {
  std::string name;
  Direction direction = Direction::Maximize;
  double weight = 0.0;

  bool operator==(const AttributeSpec&) const = default;
};

struct QosConfig {
  std::vector<AttributeSpec> attributes;
  int nGaps = 3;
  double stabilityWeight = 0.7;
  double epsilon = 1e-9;

  /// availability (max, .4), executionTimeMs (min, .4), totalCalls (max, .2).
  static QosConfig defaults();

  /// Throws Error(Config) when weights do not sum to 1, a weight is outside
  /// (0, 1], nGaps < 1, stabilityWeight is outside (0, 1] or epsilon <= 0.
  void validate() const;

  bool operator==(const QosConfig&) const = default;
};

struct AttributeStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
  std::size_t sampleCount = 0;
};

/// stats[gap index][attribute name].
struct PoolStats {
  std::vector<std::map<std::string, AttributeStats>> perIndex;
};

/// Snapshots of one candidate right-aligned onto gap indices.
struct AlignedHistory {
  std::size_t firstIndex = 0;  // index of snapshots.front()
  std::vector<registry::QosSnapshot> snapshots;  // oldest -> newest
  bool rated() const { return !snapshots.empty(); }
};

struct Alignment {
  std::vector<AlignedHistory> histories;  // parallel to the input pool
  PoolStats stats;
};

struct QosScores {
  std::vector<double> ufSeries;  // oldest -> newest
  std::vector<double> changes;
  double aggregateChange = 0.0;
  double ufLatest = 0.0;      // newest raw utility
  double ufLatestNorm = 0.0;  // newest utility, min-max over the rated pool
  double acNorm = 0.0;        // aggregate change, min-max over the rated pool
  double nfp = 0.0;
  bool rated = false;
};

/// Aligns the last nGaps snapshots of every history and computes pool
/// statistics for the attributes named in specs. Empty histories are left
/// out of the statistics.
Alignment align_snapshots(std::span<const std::vector<registry::QosSnapshot>* const> pool,
                          int n_gaps, const std::vector<AttributeSpec>& specs);

/// Weighted z-score utility of one snapshot. A term whose pool deviation is
/// below epsilon contributes 0 (maximise) or its full weight (minimise).
/// Throws Error(Validation) if the snapshot lacks a configured attribute.
double utility(const registry::QosSnapshot& snap, const std::map<std::string, AttributeStats>& stats,
               const std::vector<AttributeSpec>& specs, double epsilon);

/// Relative change later/earlier - 1; 0 when |earlier| < epsilon.
double change(double uf_earlier, double uf_later, double epsilon);

/// Sum of consecutive changes; 0 for fewer than two values.
double aggregate_change(std::span<const double> uf_series, double epsilon);

double nfp_score(double uf_latest_norm, double ac_norm, double stability_weight);

/// Min-max onto [0, 1]. A pool whose spread is below epsilon maps to all 1.
std::vector<double> normalize_pool(std::span<const double> values, double epsilon = 1e-9);

/// Full scoring of one gated pool. Results are parallel to the input. The
/// pool statistics are accumulated in a canonical order (by the caller-given
/// keys) so the result does not depend on the order of the pool.
std::vector<QosScores> score_pool(std::span<const std::vector<registry::QosSnapshot>* const> pool,
                                  std::span<const std::string> canonical_keys,
                                  const QosConfig& config);

}  // namespace procsel::qos
