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

#include "hausanoise/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hausanoise/corpus.hpp"
#include "hausanoise/errors.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/random.hpp"

namespace hausanoise::dedup {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kHashStream = 0x3141A5Bull;
constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ull;

std::uint64_t mod_mersenne61(unsigned __int128 x) {
  std::uint64_t r = static_cast<std::uint64_t>(x & kMersenne61) +
                    static_cast<std::uint64_t>(x >> 61);
  // x < 2^122, so two folds bring it below 2^62.
  r = (r & kMersenne61) + (r >> 61);
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

struct HashFamily {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

HashFamily hash_family(std::size_t num_perm, std::uint64_t seed) {
  Rng rng(mix_seed(seed, kHashStream));
  HashFamily f;
  f.a.resize(num_perm);
  f.b.resize(num_perm);
  for (std::size_t i = 0; i < num_perm; ++i) {
    f.a[i] = 1 + rng.below(kMersenne61 - 1);
    f.b[i] = rng.below(kMersenne61);
  }
  return f;
}

MinHashSignature signature_from_ids(std::span<const std::uint64_t> ids,
                                    const HashFamily& f) {
  if (ids.empty()) throw ValidationError("minhash needs a non-empty shingle set");
  const std::size_t k = f.a.size();
  MinHashSignature sig;
  sig.hashes.assign(k, std::numeric_limits<std::uint64_t>::max());
  for (std::uint64_t id : ids) {
    // Pre-mixing spreads structured ids (e.g. small integers) over the
    // field before the linear hash.
    const std::uint64_t x = mod_mersenne61(splitmix64(id));
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t h = mod_mersenne61(
          static_cast<unsigned __int128>(f.a[i]) * x + f.b[i]);
      sig.hashes[i] = std::min(sig.hashes[i], h);
    }
  }
  return sig;
}

std::vector<std::uint64_t> ids_of(const ShingleSet& shingles) {
  std::vector<std::uint64_t> ids;
  ids.reserve(shingles.size());
  for (const auto& s : shingles) ids.push_back(shingle_id(s));
  return ids;
}

}  // namespace

ShingleSet shingle(std::string_view text, std::size_t k) {
  if (k == 0) throw ValidationError("shingle size must be at least 1");
  const auto tokens = corpus::tokenize_words(text);
  ShingleSet out;
  if (tokens.empty()) return out;
  if (tokens.size() < k) {
    out.insert(tokens);
    return out;
  }
  for (std::size_t i = 0; i + k <= tokens.size(); ++i) {
    out.emplace(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                tokens.begin() + static_cast<std::ptrdiff_t>(i + k));
  }
  return out;
}

std::uint64_t shingle_id(const Shingle& s) {
  std::uint64_t h = kFnvOffset;
  for (const auto& token : s) {
    for (unsigned char c : token) {
      h ^= c;
      h *= kFnvPrime;
    }
    // 0xFF never occurs in UTF-8, so it separates tokens unambiguously.
    h ^= 0xFF;
    h *= kFnvPrime;
  }
  return splitmix64(h);
}

double MinHashSignature::jaccard(const MinHashSignature& other) const {
  if (hashes.size() != other.hashes.size() || hashes.empty()) {
    throw ValidationError("MinHash signatures differ in length");
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    agree += hashes[i] == other.hashes[i] ? 1 : 0;
  }
  return static_cast<double>(agree) / static_cast<double>(hashes.size());
}

MinHashSignature minhash(std::span<const std::uint64_t> ids,
                         std::size_t num_perm, std::uint64_t seed) {
  if (num_perm == 0) throw ValidationError("num_perm must be at least 1");
  return signature_from_ids(ids, hash_family(num_perm, seed));
}

MinHashSignature minhash(const ShingleSet& shingles, std::size_t num_perm,
                         std::uint64_t seed) {
  if (shingles.empty()) throw ValidationError("minhash needs a non-empty shingle set");
  const auto ids = ids_of(shingles);
  auto sig = minhash(ids, num_perm, seed);
  sig.shingle_size = shingles.begin()->size();
  return sig;
}

double exact_jaccard(const ShingleSet& a, const ShingleSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

LshBanding LshBanding::choose(std::size_t num_perm, double threshold) {
  LshBanding best;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t bands = num_perm; bands >= 1; --bands) {
    if (num_perm % bands != 0) continue;
    LshBanding candidate{bands, num_perm / bands};
    const double gap = std::abs(candidate.midpoint() - threshold);
    if (gap < best_gap) {
      best_gap = gap;
      best = candidate;
    }
  }
  return best;
}

double LshBanding::midpoint() const {
  return std::pow(1.0 / static_cast<double>(bands), 1.0 / static_cast<double>(rows));
}

void AuditOptions::validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ValidationError("threshold must be in (0, 1]");
  }
  if (num_perm == 0) throw ValidationError("num_perm must be at least 1");
  if (shingle_size == 0) throw ValidationError("shingle size must be at least 1");
}

void OverlapReport::sort_pairs() {
  std::sort(pairs.begin(), pairs.end(), [](const OverlapPair& x, const OverlapPair& y) {
    if (x.estimate != y.estimate) return x.estimate > y.estimate;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
}

Json OverlapReport::to_json() const {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["threshold"] = threshold;
  doc["num_perm"] = num_perm;
  doc["shingle_size"] = shingle_size;
  doc["seed"] = seed;
  doc["bands"] = banding.bands;
  doc["rows"] = banding.rows;
  doc["exact_recheck"] = exact;
  doc["sentences_a"] = sentences_a;
  doc["sentences_b"] = sentences_b;
  doc["overlap_count"] = pairs.size();
  Json list = Json::array();
  for (const auto& p : pairs) {
    Json item = Json::object();
    item["a"] = p.a;
    item["b"] = p.b;
    item["estimate"] = p.estimate;
    if (exact) item["exact"] = p.exact;
    list.push_back(std::move(item));
  }
  doc["pairs"] = std::move(list);
  return doc;
}

OverlapIndex::OverlapIndex(std::span<const std::string> corpus_b,
                           const AuditOptions& options)
    : options_(options),
      banding_(LshBanding::choose(options.num_perm, options.threshold)),
      size_(corpus_b.size()),
      entries_(corpus_b.size()),
      buckets_(banding_.bands) {
  options_.validate();
  if (corpus_b.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw SizeError("corpus B is too large to index");
  }
  const auto family = hash_family(options_.num_perm, options_.seed);
  parallel_for(corpus_b.size(), options_.workers, [&](std::size_t i) {
    auto shingles = shingle(corpus_b[i], options_.shingle_size);
    if (shingles.empty()) return;
    Entry& e = entries_[i];
    e.signature = signature_from_ids(ids_of(shingles), family);
    e.signature.shingle_size = options_.shingle_size;
    e.present = true;
    if (options_.exact) e.shingles = std::move(shingles);
  });
  // Serial insertion in index order keeps bucket contents deterministic.
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].present) continue;
    for (std::size_t band = 0; band < banding_.bands; ++band) {
      buckets_[band][band_key(entries_[i].signature, band)].push_back(
          static_cast<std::uint32_t>(i));
    }
  }
}

std::uint64_t OverlapIndex::band_key(const MinHashSignature& sig,
                                     std::size_t band) const {
  std::uint64_t h = kFnvOffset;
  for (std::size_t r = 0; r < banding_.rows; ++r) {
    h = splitmix64(h ^ sig.hashes[band * banding_.rows + r]);
  }
  return h;
}

std::vector<OverlapPair> OverlapIndex::query(std::span<const std::string> block,
                                             std::size_t offset) const {
  const auto family = hash_family(options_.num_perm, options_.seed);
  std::vector<std::vector<OverlapPair>> found(block.size());
  parallel_for(block.size(), options_.workers, [&](std::size_t i) {
    const auto shingles = shingle(block[i], options_.shingle_size);
    if (shingles.empty()) return;
    const auto sig = signature_from_ids(ids_of(shingles), family);
    std::vector<std::uint32_t> candidates;
    for (std::size_t band = 0; band < banding_.bands; ++band) {
      const auto it = buckets_[band].find(band_key(sig, band));
      if (it == buckets_[band].end()) continue;
      candidates.insert(candidates.end(), it->second.begin(), it->second.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (std::uint32_t j : candidates) {
      const Entry& e = entries_[j];
      const double estimate = sig.jaccard(e.signature);
      if (estimate < options_.threshold) continue;
      OverlapPair pair{offset + i, j, estimate, -1.0};
      if (options_.exact) {
        pair.exact = exact_jaccard(shingles, e.shingles);
        if (pair.exact < options_.threshold) continue;
      }
      found[i].push_back(pair);
    }
  });
  std::vector<OverlapPair> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

OverlapReport audit_overlap(std::span<const std::string> corpus_a,
                            std::span<const std::string> corpus_b,
                            const AuditOptions& options) {
  options.validate();
  if (corpus_a.empty() || corpus_b.empty()) {
    throw ValidationError("audit needs two non-empty corpora");
  }
  const OverlapIndex index(corpus_b, options);
  OverlapReport report;
  report.pairs = index.query(corpus_a, 0);
  report.threshold = options.threshold;
  report.num_perm = options.num_perm;
  report.shingle_size = options.shingle_size;
  report.seed = options.seed;
  report.banding = index.banding();
  report.exact = options.exact;
  report.sentences_a = corpus_a.size();
  report.sentences_b = corpus_b.size();
  report.sort_pairs();
  return report;
}

}  // namespace hausanoise::dedup
