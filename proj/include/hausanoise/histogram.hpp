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

#include <cstdint>
#include <vector>

#include "hausanoise/json.hpp"

namespace hausanoise::profile {

/// Binned distribution of normalized edit distances over [0, 1].
///
/// Bins are half-open [e_k, e_{k+1}) except the last, which also holds 1.0.
/// Counts are kept alongside the mass so histograms built from samples can
/// be merged exactly; merging is associative and commutative.
class DistanceHistogram {
 public:
  DistanceHistogram() = default;
  // Edges must be strictly increasing, start at 0 and end at 1.
  explicit DistanceHistogram(std::vector<double> edges);
  static DistanceHistogram uniform(std::size_t bins);

  std::size_t bin_of(double value) const;
  void add(double value);
  // Throws ValidationError if the edges differ.
  void merge(const DistanceHistogram& other);

  std::size_t bins() const noexcept { return counts_.size(); }
  const std::vector<double>& edges() const noexcept { return edges_; }
  const std::vector<double>& counts() const noexcept { return counts_; }
  std::uint64_t sample_count() const noexcept { return samples_; }
  // Unit-mass vector; all zeros when there are no samples.
  std::vector<double> mass() const;
  bool same_edges(const DistanceHistogram& other) const;

  Json to_json() const;
  static DistanceHistogram from_json(const Json& doc);

 private:
  std::vector<double> edges_;
  std::vector<double> counts_;
  std::uint64_t samples_ = 0;
  bool uniform_ = false;
};

}  // namespace hausanoise::profile
