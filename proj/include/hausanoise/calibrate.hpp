// Copyright 2026 The hausanoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hausanoise/corpus.hpp"
#include "hausanoise/histogram.hpp"
#include "hausanoise/json.hpp"
#include "hausanoise/noise.hpp"

namespace hausanoise::calibrate {

// Added to empty bins (then renormalised) before the KL terms.
inline constexpr double kEmptyBinMass = 1e-12;

/// Jensen-Shannon distance with base-2 logarithms, so the result is in
/// [0, 1]: sqrt(KL(P||M)/2 + KL(Q||M)/2) with M = (P + Q) / 2.
/// Throws ValidationError if the bin edges differ or either side is empty.
double js_distance(const profile::DistanceHistogram& p,
                   const profile::DistanceHistogram& q);
double js_distance(std::span<const double> p, std::span<const double> q);

struct ProbabilityBounds {
  double low = 0.0;
  double high = 0.0;
};

struct CalibrationOptions {
  std::size_t iterations = 500;
  double threshold = 0.15;
  std::uint64_t seed = 0;
  std::size_t min_sentences = 2000;
  // Sentences drawn (deterministically) from the corpus for every
  // candidate evaluation.
  std::size_t sample_size = 2000;
  std::size_t workers = 1;
  // Stop at the first candidate under the threshold instead of spending the
  // whole budget.
  bool early_stop = false;
  // Returned unchanged (with js = 1) when the budget is zero.
  noise::NoiseConfig seed_config = noise::NoiseConfig::table1();
  // Per-key [low, high]; candidates are drawn log-uniformly inside.
  std::array<ProbabilityBounds, noise::NoiseConfig::kNumProbabilities> bounds =
      default_bounds();

  // [1e-4, max(1e-4, 4 x published value)] per key.
  static std::array<ProbabilityBounds, noise::NoiseConfig::kNumProbabilities>
  default_bounds();
};

struct CalibrationResult {
  noise::NoiseConfig config;
  double js = 1.0;
  std::size_t iterations = 0;
  std::size_t best_iteration = 0;
  bool converged = false;
  double threshold = 0.0;
  std::string target_hash;
  // js of each evaluated candidate, in iteration order.
  std::vector<double> trajectory;

  // Running minimum of the trajectory.
  std::vector<double> best_so_far() const;
  Json to_json() const;
};

// Canonical digest of a histogram (SHA-256 over its edges and mass).
std::string histogram_digest(const profile::DistanceHistogram& h);

// Draws one candidate configuration for an iteration index.
noise::NoiseConfig sample_candidate(const CalibrationOptions& options,
                                    std::size_t iteration);

// Random search over the nine probabilities. Candidates are independent
// of evaluation order and the winner is the lowest js (lowest iteration on
// ties), so any worker count gives the same result. Throws ValidationError
// when the corpus is smaller than options.min_sentences or the target is
// empty.
CalibrationResult calibrate(const profile::DistanceHistogram& target,
                            std::span<const corpus::SentenceRecord> corpus,
                            const CalibrationOptions& options);

// Deterministic sample of at most `size` sentences (seeded partial
// shuffle, then restored to corpus order).
std::vector<corpus::SentenceRecord> calibration_sample(
    std::span<const corpus::SentenceRecord> corpus, std::size_t size,
    std::uint64_t seed);

}  // namespace hausanoise::calibrate
