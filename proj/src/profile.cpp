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

#include "hausanoise/profile.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "hausanoise/errors.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/strdist.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::profile {

namespace {

double normalize(std::uint32_t distance, std::size_t la, std::size_t lb) {
  const std::size_t longest = std::max(la, lb);
  return longest == 0 ? 0.0
                      : static_cast<double>(distance) /
                            static_cast<double>(longest);
}

std::vector<std::u32string> decode_all(std::span<const std::string> words) {
  std::vector<std::u32string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(unicode::decode(w));
  return out;
}

// Normalized distances for a list of index pairs over `words`.
void pair_distances(const std::vector<std::u32string>& words,
                    std::span<const std::pair<std::size_t, std::size_t>> idx,
                    std::vector<double>& out) {
  std::vector<strdist::PairView> views;
  views.reserve(idx.size());
  for (auto [i, j] : idx) views.push_back({words[i], words[j]});
  std::vector<std::uint32_t> d(views.size());
  strdist::levenshtein_batch(views, d);
  for (std::size_t k = 0; k < views.size(); ++k) {
    out.push_back(normalize(d[k], views[k].a.size(), views[k].b.size()));
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n)
    : n_(n), upper_(n < 2 ? 0 : n * (n - 1) / 2, 0.0) {}

DistanceMatrix DistanceMatrix::from_dense(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DistanceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("distance matrix is not square");
    }
    if (rows[i][i] != 0.0) {
      throw ValidationError("distance matrix diagonal must be zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rows[i][j] >= 0.0)) {
        throw ValidationError("distance matrix has a negative entry at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
      if (rows[i][j] != rows[j][i]) {
        throw ValidationError("distance matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::size_t DistanceMatrix::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  // Row-major strict upper triangle.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

double DistanceMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return upper_[index(i, j)];
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) {
    if (value != 0.0) throw ValidationError("diagonal must stay zero");
    return;
  }
  if (!(value >= 0.0)) throw ValidationError("distances must be non-negative");
  upper_[index(i, j)] = value;
}

std::size_t ClusterSet::cluster_count() const {
  int top = kNoise;
  for (int l : labels) top = std::max(top, l);
  return static_cast<std::size_t>(top + 1);
}

std::vector<std::vector<std::size_t>> ClusterSet::clusters() const {
  std::vector<std::vector<std::size_t>> out(cluster_count());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != kNoise) out[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  return out;
}

std::set<std::string> flag_oov(std::span<const std::string> tokens,
                               const corpus::Lexicon& lexicon) {
  if (lexicon.empty()) {
    throw ConfigError("OOV flagging needs a non-empty lexicon");
  }
  std::set<std::string> out;
  for (const auto& token : tokens) {
    const std::u32string folded = unicode::to_lower(unicode::decode(token));
    if (folded.size() <= 2) continue;
    if (std::none_of(folded.begin(), folded.end(),
                     [](char32_t c) { return unicode::is_letter(c); })) {
      continue;
    }
    std::string word = unicode::encode(folded);
    if (!lexicon.contains(word)) out.insert(std::move(word));
  }
  return out;
}

std::vector<LengthBucket> bucket_by_length(std::span<const std::string> words) {
  std::map<std::size_t, std::vector<std::string>> by_length;
  for (const auto& w : words) by_length[unicode::length(w)].push_back(w);
  for (auto& [len, list] : by_length) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<LengthBucket> buckets;
  buckets.reserve(by_length.size());
  for (const auto& [center, unused] : by_length) {
    LengthBucket bucket;
    bucket.center = center;
    for (std::size_t len = center == 0 ? 0 : center - 1; len <= center + 1;
         ++len) {
      auto it = by_length.find(len);
      if (it == by_length.end()) continue;
      bucket.members.insert(bucket.members.end(), it->second.begin(),
                            it->second.end());
    }
    std::sort(bucket.members.begin(), bucket.members.end());
    buckets.push_back(std::move(bucket));
  }
  return buckets;
}

DistanceMatrix distance_matrix(const LengthBucket& bucket,
                               std::size_t max_members) {
  const std::size_t n = bucket.members.size();
  if (n > max_members) {
    throw SizeError("bucket for length " + std::to_string(bucket.center) +
                    " has " + std::to_string(n) + " words, above the cap of " +
                    std::to_string(max_members) +
                    "; shard the input or raise --max-bucket");
  }
  const auto words = decode_all(bucket.members);
  DistanceMatrix m(n);
  std::vector<std::uint32_t> row;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::span<const std::u32string> rest(words.begin() + static_cast<std::ptrdiff_t>(i + 1), words.end());
    row.resize(rest.size());
    strdist::levenshtein_one_to_many(words[i], rest, row);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      m.set(i, i + 1 + k, normalize(row[k], words[i].size(), rest[k].size()));
    }
  }
  return m;
}

ClusterSet dbscan(const DistanceMatrix& matrix, double eps,
                  std::size_t min_samples) {
  if (!(eps > 0.0)) throw ValidationError("dbscan eps must be positive");
  if (min_samples < 1) throw ValidationError("dbscan min_samples must be >= 1");

  const std::size_t n = matrix.size();
  ClusterSet result;
  result.eps = eps;
  result.min_samples = min_samples;
  result.labels.assign(n, ClusterSet::kNoise);

  std::vector<char> core(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t within = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix(i, j) <= eps) ++within;
    }
    core[i] = within >= min_samples;
  }

  int next_label = 0;
  std::deque<std::size_t> frontier;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!core[seed] || result.labels[seed] != ClusterSet::kNoise) continue;
    const int label = next_label++;
    result.labels[seed] = label;
    frontier.push_back(seed);
    while (!frontier.empty()) {
      const std::size_t p = frontier.front();
      frontier.pop_front();
      for (std::size_t q = 0; q < n; ++q) {
        if (!core[q] || result.labels[q] != ClusterSet::kNoise) continue;
        if (matrix(p, q) <= eps) {
          result.labels[q] = label;
          frontier.push_back(q);
        }
      }
    }
  }

  // Border points. Clusters were numbered by lowest core index, but a
  // border point can have a lower index than every core of its cluster, so
  // renumber afterwards.
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) continue;
    double best = std::numeric_limits<double>::infinity();
    int label = ClusterSet::kNoise;
    for (std::size_t j = 0; j < n; ++j) {
      if (!core[j]) continue;
      const double d = matrix(i, j);
      if (d <= eps && d < best) {
        best = d;
        label = result.labels[j];
      }
    }
    result.labels[i] = label;
  }

  std::vector<int> remap(static_cast<std::size_t>(next_label), ClusterSet::kNoise);
  int renumbered = 0;
  for (int& l : result.labels) {
    if (l == ClusterSet::kNoise) continue;
    auto& slot = remap[static_cast<std::size_t>(l)];
    if (slot == ClusterSet::kNoise) slot = renumbered++;
    l = slot;
  }
  return result;
}

DistanceHistogram empirical_histogram(
    std::span<const BucketClustering> clusterings,
    const DistanceHistogram& empty_template) {
  DistanceHistogram hist = empty_template;
  bool any_cluster = false;
  std::vector<double> samples;
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& bc : clusterings) {
    const auto groups = bc.clusters.clusters();
    if (groups.empty()) continue;
    any_cluster = true;
    const auto words = decode_all(bc.bucket.members);
    for (const auto& members : groups) {
      idx.clear();
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          idx.emplace_back(members[a], members[b]);
        }
      }
      samples.clear();
      pair_distances(words, idx, samples);
      for (double d : samples) hist.add(d);
    }
  }
  if (!any_cluster) {
    throw EmptyProfileError(
        "no clusters found; the empirical profile would be empty");
  }
  return hist;
}

DistanceHistogram empirical_histogram(
    std::span<const BucketClustering> clusterings, std::size_t bins) {
  return empirical_histogram(clusterings, DistanceHistogram::uniform(bins));
}

void collect_changed_word_distances(std::string_view clean,
                                    std::string_view noisy,
                                    std::vector<double>& out) {
  const auto ref = corpus::split_whitespace(clean);
  const auto hyp = corpus::split_whitespace(noisy);
  if (ref == hyp) return;
  std::vector<std::u32string> words;
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& step : strdist::align_tokens(ref, hyp)) {
    if (step.op != strdist::EditOp::kSubstitute) continue;
    words.push_back(unicode::decode(ref[step.ref_index]));
    words.push_back(unicode::decode(hyp[step.hyp_index]));
    idx.emplace_back(words.size() - 2, words.size() - 1);
  }
  std::vector<double> d;
  pair_distances(words, idx, d);
  for (double v : d) {
    if (v > 0.0) out.push_back(v);
  }
}

DistanceHistogram synthetic_histogram(std::span<const noise::ParallelPair> pairs,
                                      const DistanceHistogram& empty_template) {
  if (pairs.empty()) throw ValidationError("synthetic histogram needs pairs");
  DistanceHistogram hist = empty_template;
  std::vector<double> samples;
  for (const auto& p : pairs) {
    samples.clear();
    collect_changed_word_distances(p.clean, p.noisy, samples);
    for (double d : samples) hist.add(d);
  }
  if (hist.sample_count() == 0) {
    throw EmptyProfileError("no changed words; the synthetic profile is empty");
  }
  return hist;
}

DistanceHistogram synthetic_histogram(std::span<const noise::ParallelPair> pairs,
                                      std::size_t bins) {
  return synthetic_histogram(pairs, DistanceHistogram::uniform(bins));
}

Json ProfileResult::to_json() const {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["histogram"] = histogram.to_json();
  Json sizes = Json::array();
  for (const auto& [size, count] : cluster_sizes) {
    sizes.push_back(Json::array({size, count}));
  }
  doc["cluster_sizes"] = sizes;
  doc["dbscan"] = Json{{"eps", options.eps},
                       {"min_samples", options.min_samples},
                       {"metric", "normalized_levenshtein"}};
  doc["bins"] = options.bins;
  doc["counts"] = Json{{"tokens", token_count},
                       {"oov_words", oov_count},
                       {"buckets", bucket_count},
                       {"clusters", cluster_count},
                       {"clustered_points", clustered_points},
                       {"noise_points", noise_points}};
  return doc;
}

ProfileResult profile_corpus(std::span<const std::string> lines,
                             const corpus::Lexicon& lexicon,
                             const ProfileOptions& options) {
  ProfileResult result;
  result.options = options;

  std::vector<std::string> tokens;
  for (const auto& line : lines) {
    auto toks = corpus::tokenize_words(corpus::clean_text(line));
    tokens.insert(tokens.end(), std::make_move_iterator(toks.begin()),
                  std::make_move_iterator(toks.end()));
  }
  result.token_count = tokens.size();

  const auto oov = flag_oov(tokens, lexicon);
  result.oov_count = oov.size();
  const std::vector<std::string> words(oov.begin(), oov.end());
  const auto buckets = bucket_by_length(words);
  result.bucket_count = buckets.size();

  std::vector<BucketClustering> clustered(buckets.size());
  parallel_for(buckets.size(), options.workers, [&](std::size_t i) {
    const auto matrix = distance_matrix(buckets[i], options.max_bucket);
    clustered[i] = {buckets[i], dbscan(matrix, options.eps, options.min_samples)};
  });

  for (const auto& bc : clustered) {
    for (const auto& members : bc.clusters.clusters()) {
      ++result.cluster_sizes[members.size()];
      ++result.cluster_count;
      result.clustered_points += members.size();
    }
    for (int l : bc.clusters.labels) {
      if (l == ClusterSet::kNoise) ++result.noise_points;
    }
  }
  result.histogram = empirical_histogram(clustered, options.bins);
  return result;
}

DistanceHistogram load_profile_histogram(const Json& doc) {
  if (doc.contains("histogram")) {
    return DistanceHistogram::from_json(doc.at("histogram"));
  }
  return DistanceHistogram::from_json(doc);
}

std::vector<NearestEntry> nearest_vocabulary(std::span<const std::string> words,
                                             const corpus::Lexicon& lexicon,
                                             std::size_t workers) {
  std::map<std::size_t, std::vector<std::u32string>> by_length;
  {
    std::vector<std::string> sorted(lexicon.entries().begin(),
                                    lexicon.entries().end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& e : sorted) {
      auto s = unicode::decode(e);
      by_length[s.size()].push_back(std::move(s));
    }
  }

  std::vector<NearestEntry> out(words.size());
  parallel_for(words.size(), workers, [&](std::size_t w) {
    const std::u32string query = unicode::to_lower(unicode::decode(words[w]));
    // Visit lengths by their distance lower bound |la - lb| / max(la, lb).
    std::vector<std::pair<double, std::size_t>> order;
    for (const auto& [len, unused] : by_length) {
      const std::size_t longest = std::max(len, query.size());
      const double bound =
          longest == 0 ? 0.0
                       : static_cast<double>(len > query.size()
                                                 ? len - query.size()
                                                 : query.size() - len) /
                             static_cast<double>(longest);
      order.emplace_back(bound, len);
    }
    std::sort(order.begin(), order.end());

    NearestEntry best{words[w], {}, std::numeric_limits<double>::infinity()};
    std::u32string best_word;
    std::vector<std::uint32_t> d;
    for (auto [bound, len] : order) {
      if (bound > best.distance) break;
      const auto& cands = by_length.at(len);
      d.resize(cands.size());
      strdist::levenshtein_one_to_many(query, cands, d);
      for (std::size_t k = 0; k < cands.size(); ++k) {
        const double nd = normalize(d[k], query.size(), cands[k].size());
        if (nd < best.distance ||
            (nd == best.distance && cands[k] < best_word)) {
          best.distance = nd;
          best_word = cands[k];
        }
      }
    }
    best.nearest = unicode::encode(best_word);
    if (!std::isfinite(best.distance)) best.distance = 1.0;
    out[w] = std::move(best);
  });
  return out;
}

}  // namespace hausanoise::profile
