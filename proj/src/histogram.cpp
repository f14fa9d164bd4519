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

#include "hausanoise/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hausanoise/errors.hpp"

namespace hausanoise::profile {

namespace {

// Distances are ratios of small integers; a value like 3/10 lands a hair
// below 0.3 * bins in floating point, so nudge before flooring.
constexpr double kEdgeSlack = 1e-9;

}  // namespace

DistanceHistogram::DistanceHistogram(std::vector<double> edges)
    : edges_(std::move(edges)) {
  if (edges_.size() < 2) {
    throw ValidationError("histogram needs at least two bin edges");
  }
  if (edges_.front() != 0.0 || edges_.back() != 1.0) {
    throw ValidationError("histogram edges must span [0, 1]");
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i] > edges_[i - 1])) {
      throw ValidationError("histogram edges must be strictly increasing");
    }
  }
  counts_.assign(edges_.size() - 1, 0.0);
  const auto n = static_cast<double>(counts_.size());
  uniform_ = true;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] != static_cast<double>(i) / n) uniform_ = false;
  }
}

DistanceHistogram DistanceHistogram::uniform(std::size_t bins) {
  if (bins == 0) throw ValidationError("histogram needs at least one bin");
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = static_cast<double>(i) / static_cast<double>(bins);
  }
  return DistanceHistogram(std::move(edges));
}

std::size_t DistanceHistogram::bin_of(double value) const {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError("histogram value outside [0, 1]");
  }
  const std::size_t last = counts_.size() - 1;
  if (uniform_) {
    const auto idx = static_cast<std::size_t>(
        std::floor(value * static_cast<double>(counts_.size()) + kEdgeSlack));
    return std::min(idx, last);
  }
  auto it = std::upper_bound(edges_.begin(), edges_.end(), value + kEdgeSlack);
  const auto idx = static_cast<std::size_t>(it - edges_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, last);
}

void DistanceHistogram::add(double value) {
  counts_[bin_of(value)] += 1.0;
  ++samples_;
}

bool DistanceHistogram::same_edges(const DistanceHistogram& other) const {
  return edges_ == other.edges_;
}

void DistanceHistogram::merge(const DistanceHistogram& other) {
  if (!same_edges(other)) {
    throw ValidationError("cannot merge histograms with different bin edges");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  samples_ += other.samples_;
}

std::vector<double> DistanceHistogram::mass() const {
  std::vector<double> m(counts_.size(), 0.0);
  double total = 0.0;
  for (double c : counts_) total += c;
  if (total <= 0.0) return m;
  for (std::size_t i = 0; i < counts_.size(); ++i) m[i] = counts_[i] / total;
  return m;
}

Json DistanceHistogram::to_json() const {
  Json doc = Json::object();
  doc["bin_edges"] = edges_;
  doc["mass"] = mass();
  doc["counts"] = counts_;
  doc["sample_count"] = samples_;
  return doc;
}

DistanceHistogram DistanceHistogram::from_json(const Json& doc) {
  try {
    DistanceHistogram h(doc.at("bin_edges").get<std::vector<double>>());
    if (doc.contains("counts")) {
      auto counts = doc.at("counts").get<std::vector<double>>();
      if (counts.size() != h.bins()) {
        throw ValidationError("histogram counts do not match bin edges");
      }
      h.counts_ = std::move(counts);
    } else {
      auto mass = doc.at("mass").get<std::vector<double>>();
      if (mass.size() != h.bins()) {
        throw ValidationError("histogram mass does not match bin edges");
      }
      h.counts_ = std::move(mass);
    }
    for (double c : h.counts_) {
      if (!(c >= 0.0)) throw ValidationError("negative histogram mass");
    }
    h.samples_ = doc.at("sample_count").get<std::uint64_t>();
    return h;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed histogram: ") + e.what());
  }
}

}  // namespace hausanoise::profile
