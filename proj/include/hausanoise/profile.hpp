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

// Error-distance profiling of a naturally noisy corpus.
//
// OOV tokens are grouped into overlapping length buckets; each bucket gets
// a full normalized-Levenshtein matrix and is clustered with DBSCAN over
// that precomputed metric. Intra-cluster pairwise distances (noise points
// excluded) make up the empirical histogram that calibration targets.

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hausanoise/corpus.hpp"
#include "hausanoise/histogram.hpp"
#include "hausanoise/json.hpp"
#include "hausanoise/noise.hpp"

namespace hausanoise::profile {

struct LengthBucket {
  std::size_t center = 0;
  // Distinct words with length in [center - 1, center + 1], sorted.
  std::vector<std::string> members;
};

// Symmetric matrix with a zero diagonal, stored as the strict upper
// triangle.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);
  // Throws ValidationError on non-square, asymmetric, negative or non-zero
  // diagonal input.
  static DistanceMatrix from_dense(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<double> upper_;
};

struct ClusterSet {
  static constexpr int kNoise = -1;

  std::vector<int> labels;
  double eps = 0.0;
  std::size_t min_samples = 0;

  std::size_t cluster_count() const;
  // Member indices per cluster id.
  std::vector<std::vector<std::size_t>> clusters() const;
};

inline constexpr std::size_t kDefaultMaxBucket = 20000;
inline constexpr double kDefaultEps = 0.4;
inline constexpr std::size_t kDefaultMinSamples = 2;
inline constexpr std::size_t kDefaultBins = 20;

// Distinct case-folded tokens longer than two symbols that contain at least
// one letter and are absent from the lexicon. Throws ConfigError on an
// empty lexicon.
std::set<std::string> flag_oov(std::span<const std::string> tokens,
                               const corpus::Lexicon& lexicon);

// One bucket per observed length, in increasing order of length.
std::vector<LengthBucket> bucket_by_length(std::span<const std::string> words);

// Throws SizeError when the bucket exceeds `max_members`.
DistanceMatrix distance_matrix(const LengthBucket& bucket,
                               std::size_t max_members = kDefaultMaxBucket);

// DBSCAN over a precomputed metric. A point is core when at least
// `min_samples` points (itself included) lie within distance <= eps.
// Clusters are numbered in order of their lowest member index. A border
// point joins the cluster of its nearest core neighbour (lowest index on
// ties).
ClusterSet dbscan(const DistanceMatrix& matrix, double eps,
                  std::size_t min_samples);

struct BucketClustering {
  LengthBucket bucket;
  ClusterSet clusters;
};

// Histogram of all intra-cluster pairwise normalized distances. Throws
// EmptyProfileError when no bucket has a cluster.
DistanceHistogram empirical_histogram(
    std::span<const BucketClustering> clusterings,
    std::size_t bins = kDefaultBins);
DistanceHistogram empirical_histogram(
    std::span<const BucketClustering> clusterings,
    const DistanceHistogram& empty_template);

// Changed-word distances between clean and noisy sentences: whitespace
// tokens are aligned by word-level edit distance and every substituted
// word pair with a non-zero distance contributes one sample.
void collect_changed_word_distances(std::string_view clean,
                                    std::string_view noisy,
                                    std::vector<double>& out);

// Throws EmptyProfileError when no word changed.
DistanceHistogram synthetic_histogram(std::span<const noise::ParallelPair> pairs,
                                      std::size_t bins = kDefaultBins);
DistanceHistogram synthetic_histogram(std::span<const noise::ParallelPair> pairs,
                                      const DistanceHistogram& empty_template);

struct ProfileOptions {
  double eps = kDefaultEps;
  std::size_t min_samples = kDefaultMinSamples;
  std::size_t bins = kDefaultBins;
  std::size_t max_bucket = kDefaultMaxBucket;
  std::size_t workers = 1;
};

struct ProfileResult {
  DistanceHistogram histogram;
  std::map<std::size_t, std::size_t> cluster_sizes;  // size -> count
  std::size_t token_count = 0;
  std::size_t oov_count = 0;
  std::size_t bucket_count = 0;
  std::size_t cluster_count = 0;
  std::size_t clustered_points = 0;
  std::size_t noise_points = 0;
  ProfileOptions options;

  Json to_json() const;
};

// Cleans and tokenizes each line, then runs OOV flagging, bucketing,
// clustering and histogram extraction.
ProfileResult profile_corpus(std::span<const std::string> lines,
                             const corpus::Lexicon& lexicon,
                             const ProfileOptions& options = {});

// Reads the histogram back out of a profile document.
DistanceHistogram load_profile_histogram(const Json& doc);

struct NearestEntry {
  std::string word;
  std::string nearest;
  double distance = 0.0;
};

// Closest lexicon entry for each word (ties resolved lexicographically).
std::vector<NearestEntry> nearest_vocabulary(std::span<const std::string> words,
                                             const corpus::Lexicon& lexicon,
                                             std::size_t workers = 1);

}  // namespace hausanoise::profile
