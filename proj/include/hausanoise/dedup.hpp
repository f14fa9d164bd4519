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

// Contamination audit: MinHash signatures over word shingles and LSH
// banding to find approximate overlaps between two corpora.

#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hausanoise/json.hpp"

namespace hausanoise::dedup {

inline constexpr std::size_t kDefaultNumPerm = 128;
inline constexpr std::size_t kDefaultShingleSize = 3;

using Shingle = std::vector<std::string>;
using ShingleSet = std::set<Shingle>;

// Contiguous k-token windows of tokenize_words(text). A text with fewer
// than k (but at least one) tokens yields its full token tuple; a text
// with no tokens yields the empty set. Throws ValidationError when k == 0.
ShingleSet shingle(std::string_view text, std::size_t k);

// 64-bit identifier of a shingle (FNV-1a over the tokens, then mixed).
std::uint64_t shingle_id(const Shingle& s);

struct MinHashSignature {
  std::vector<std::uint64_t> hashes;
  std::size_t shingle_size = kDefaultShingleSize;

  // Fraction of agreeing positions. Throws ValidationError when the
  // signatures differ in length.
  double jaccard(const MinHashSignature& other) const;
};

// K hash functions h_i(x) = (a_i * mix(x) + b_i) mod (2^61 - 1) with
// (a_i, b_i) derived from `seed`. Throws ValidationError on an empty set
// or K == 0.
MinHashSignature minhash(const ShingleSet& shingles, std::size_t num_perm,
                         std::uint64_t seed);
MinHashSignature minhash(std::span<const std::uint64_t> ids,
                         std::size_t num_perm, std::uint64_t seed);

double exact_jaccard(const ShingleSet& a, const ShingleSet& b);

struct LshBanding {
  std::size_t bands = 0;
  std::size_t rows = 0;

  // bands * rows == num_perm, with the S-curve midpoint (1/b)^(1/r)
  // closest to the threshold (ties go to more bands).
  static LshBanding choose(std::size_t num_perm, double threshold);
  double midpoint() const;
};

struct AuditOptions {
  double threshold = 0.5;
  std::size_t num_perm = kDefaultNumPerm;
  std::size_t shingle_size = kDefaultShingleSize;
  std::uint64_t seed = 0;
  // Re-check candidates against the exact shingle Jaccard and keep only
  // pairs that also pass it.
  bool exact = false;
  std::size_t workers = 1;

  void validate() const;
};

struct OverlapPair {
  std::size_t a = 0;  // 0-based line index in corpus A
  std::size_t b = 0;  // 0-based line index in corpus B
  double estimate = 0.0;
  double exact = -1.0;  // only filled when AuditOptions::exact is set
};

struct OverlapReport {
  std::vector<OverlapPair> pairs;
  double threshold = 0.5;
  std::size_t num_perm = kDefaultNumPerm;
  std::size_t shingle_size = kDefaultShingleSize;
  std::uint64_t seed = 0;
  LshBanding banding;
  bool exact = false;
  std::size_t sentences_a = 0;
  std::size_t sentences_b = 0;

  // Orders pairs by estimate descending, then by (a, b).
  void sort_pairs();
  Json to_json() const;
};

// LSH index over corpus B. Lines without tokens are not indexed.
class OverlapIndex {
 public:
  OverlapIndex(std::span<const std::string> corpus_b, const AuditOptions& options);

  // Queries a block of corpus A whose first line has index `offset`.
  std::vector<OverlapPair> query(std::span<const std::string> block,
                                 std::size_t offset) const;

  const LshBanding& banding() const noexcept { return banding_; }
  std::size_t size() const noexcept { return size_; }

 private:
  struct Entry {
    MinHashSignature signature;
    ShingleSet shingles;  // kept only for the exact re-check
    bool present = false;
  };

  std::uint64_t band_key(const MinHashSignature& sig, std::size_t band) const;

  AuditOptions options_;
  LshBanding banding_;
  std::size_t size_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> buckets_;
};

// Throws ValidationError when either corpus is empty or options are invalid.
OverlapReport audit_overlap(std::span<const std::string> corpus_a,
                            std::span<const std::string> corpus_b,
                            const AuditOptions& options);

}  // namespace hausanoise::dedup
