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

#include "hausanoise/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hausanoise/digest.hpp"
#include "hausanoise/errors.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/profile.hpp"
#include "hausanoise/random.hpp"

namespace hausanoise::calibrate {

namespace {

constexpr std::uint64_t kCandidateStream = 0xCA11B7A7Eull;
constexpr std::uint64_t kSampleStream = 0x5A3B1Eull;
constexpr double kMinProbability = 1e-4;
constexpr double kBoundScale = 4.0;

// Normalises first so that the empty-bin mass is scale independent, then
// gives empty bins kEmptyBinMass and renormalises.
std::vector<double> smoothed(std::span<const double> v, double sum) {
  std::vector<double> out(v.begin(), v.end());
  double total = 0.0;
  for (double& x : out) {
    if (!(x >= 0.0)) throw ValidationError("negative mass in distribution");
    x = x == 0.0 ? kEmptyBinMass : x / sum;
    total += x;
  }
  for (double& x : out) x /= total;
  return out;
}

double kl_to_mixture(const std::vector<double>& p,
                     const std::vector<double>& m) {
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) kl += p[i] * std::log2(p[i] / m[i]);
  }
  return kl;
}

double evaluate_candidate(const profile::DistanceHistogram& target,
                          std::span<const corpus::SentenceRecord> sample,
                          const noise::NoiseConfig& candidate) {
  const auto pairs = noise::generate_pairs(sample, candidate, 1);
  const profile::DistanceHistogram empty(target.edges());
  try {
    return js_distance(target, profile::synthetic_histogram(pairs, empty));
  } catch (const EmptyProfileError&) {
    return 1.0;
  }
}

}  // namespace

double js_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw ValidationError("js_distance: distributions differ in size");
  }
  const double sp = std::accumulate(p.begin(), p.end(), 0.0);
  const double sq = std::accumulate(q.begin(), q.end(), 0.0);
  if (!(sp > 0.0) || !(sq > 0.0)) {
    throw ValidationError("js_distance: empty distribution");
  }
  const auto ps = smoothed(p, sp);
  const auto qs = smoothed(q, sq);
  std::vector<double> m(ps.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = 0.5 * (ps[i] + qs[i]);
  const double div = 0.5 * kl_to_mixture(ps, m) + 0.5 * kl_to_mixture(qs, m);
  return std::clamp(std::sqrt(std::max(div, 0.0)), 0.0, 1.0);
}

double js_distance(const profile::DistanceHistogram& p,
                   const profile::DistanceHistogram& q) {
  if (!p.same_edges(q)) {
    throw ValidationError("js_distance: histograms have different bin edges");
  }
  const auto pm = p.mass();
  const auto qm = q.mass();
  return js_distance(pm, qm);
}

std::array<ProbabilityBounds, noise::NoiseConfig::kNumProbabilities>
CalibrationOptions::default_bounds() {
  std::array<ProbabilityBounds, noise::NoiseConfig::kNumProbabilities> b{};
  const auto published = noise::NoiseConfig::table1();
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i].low = kMinProbability;
    b[i].high = std::min(
        1.0, std::max(kMinProbability, kBoundScale * published.probability(i)));
  }
  return b;
}

std::vector<double> CalibrationResult::best_so_far() const {
  std::vector<double> out;
  out.reserve(trajectory.size());
  double best = 1.0;
  for (double js_value : trajectory) {
    best = std::min(best, js_value);
    out.push_back(best);
  }
  return out;
}

Json CalibrationResult::to_json() const {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["status"] = converged ? "converged" : "not_converged";
  doc["js"] = js;
  doc["threshold"] = threshold;
  doc["iterations"] = iterations;
  doc["best_iteration"] = best_iteration;
  doc["target_hash"] = target_hash;
  doc["config"] = config.to_json();
  doc["trajectory"] = trajectory;
  return doc;
}

std::string histogram_digest(const profile::DistanceHistogram& h) {
  Json doc = Json::object();
  doc["bin_edges"] = h.edges();
  doc["mass"] = h.mass();
  return sha256_hex(doc.dump());
}

noise::NoiseConfig sample_candidate(const CalibrationOptions& options,
                                    std::size_t iteration) {
  Rng rng(mix_seed(mix_seed(options.seed, kCandidateStream), iteration));
  noise::NoiseConfig c;
  c.seed = options.seed;
  for (std::size_t k = 0; k < noise::NoiseConfig::kNumProbabilities; ++k) {
    const auto [low, high] = options.bounds[k];
    const double u = rng.uniform();
    double value = low;
    if (high > low) {
      value = std::exp(std::log(low) + u * (std::log(high) - std::log(low)));
    }
    c.set_probability(k, std::clamp(value, 0.0, 1.0));
  }
  return c;
}

std::vector<corpus::SentenceRecord> calibration_sample(
    std::span<const corpus::SentenceRecord> corpus, std::size_t size,
    std::uint64_t seed) {
  if (corpus.size() <= size) return {corpus.begin(), corpus.end()};
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(mix_seed(seed, kSampleStream));
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  std::vector<corpus::SentenceRecord> out;
  out.reserve(size);
  for (std::size_t i : idx) out.push_back(corpus[i]);
  return out;
}

CalibrationResult calibrate(const profile::DistanceHistogram& target,
                            std::span<const corpus::SentenceRecord> corpus,
                            const CalibrationOptions& options) {
  const auto target_mass = target.mass();
  if (std::all_of(target_mass.begin(), target_mass.end(),
                  [](double m) { return m == 0.0; })) {
    throw ValidationError("calibration target histogram is empty");
  }
  if (corpus.size() < options.min_sentences) {
    throw ValidationError("calibration corpus has " +
                          std::to_string(corpus.size()) +
                          " sentences; at least " +
                          std::to_string(options.min_sentences) +
                          " are required");
  }
  for (const auto& b : options.bounds) {
    if (!(b.low > 0.0 && b.high >= b.low && b.high <= 1.0)) {
      throw ConfigError("calibration bounds must satisfy 0 < low <= high <= 1");
    }
  }

  CalibrationResult result;
  result.threshold = options.threshold;
  result.target_hash = histogram_digest(target);
  result.config = options.seed_config;
  if (options.iterations == 0) return result;

  const auto sample = calibration_sample(corpus, options.sample_size, options.seed);
  std::vector<double> js(options.iterations, 1.0);

  const std::size_t batch =
      options.early_stop ? std::max<std::size_t>(1, options.workers) * 4
                         : options.iterations;
  std::size_t evaluated = 0;
  while (evaluated < options.iterations) {
    const std::size_t count = std::min(batch, options.iterations - evaluated);
    parallel_for(count, options.workers, [&](std::size_t k) {
      const std::size_t it = evaluated + k;
      js[it] = evaluate_candidate(target, sample, sample_candidate(options, it));
    });
    const std::size_t end = evaluated + count;
    if (options.early_stop) {
      auto hit = std::find_if(js.begin() + static_cast<std::ptrdiff_t>(evaluated),
                              js.begin() + static_cast<std::ptrdiff_t>(end),
                              [&](double v) { return v <= options.threshold; });
      if (hit != js.begin() + static_cast<std::ptrdiff_t>(end)) {
        evaluated = static_cast<std::size_t>(hit - js.begin()) + 1;
        break;
      }
    }
    evaluated = end;
  }
  js.resize(evaluated);

  const auto best = static_cast<std::size_t>(
      std::min_element(js.begin(), js.end()) - js.begin());
  result.config = sample_candidate(options, best);
  result.js = js[best];
  result.best_iteration = best;
  result.iterations = evaluated;
  result.converged = result.js <= options.threshold;
  result.trajectory = std::move(js);
  return result;
}

}  // namespace hausanoise::calibrate
